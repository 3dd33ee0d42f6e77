//! Benchmarks for the hot paths: exact linear algebra, the ambient
//! identity suite, the duality-axiom checks, and the module-category
//! report.

use criterion::{criterion_group, criterion_main, Criterion};

use staraut::builtin::builtin;
use staraut::comonadside::MonoidalComonad;
use staraut::modcat::{hom_basis, regular_module, star_autonomy_report};
use staraut::monadside::OpmonoidalMonad;
use staraut::vectcat::check_section1;
use staraut::{FieldSpec, Matrix};

fn dense(rows: usize, cols: usize, field: FieldSpec) -> Matrix {
    let mut m = Matrix::zeros(rows, cols, field);
    for i in 0..rows {
        for j in 0..cols {
            m.set(i, j, field.from_i64(((i * cols + j) % 7) as i64 - 3));
        }
    }
    m
}

fn bench_matrix(c: &mut Criterion) {
    let q = FieldSpec::Rational;
    let a = dense(16, 16, q);
    let b = dense(16, 16, q);
    c.bench_function("matrix/mul 16x16 rational", |bench| {
        bench.iter(|| a.mul(std::hint::black_box(&b)).unwrap())
    });
    c.bench_function("matrix/kron 16x16 rational", |bench| {
        bench.iter(|| a.kron(std::hint::black_box(&b)).unwrap())
    });
    let n = dense(24, 32, q);
    c.bench_function("matrix/nullspace 24x32 rational", |bench| {
        bench.iter(|| std::hint::black_box(&n).nullspace())
    });
    let g = dense(16, 16, FieldSpec::Prime(5));
    c.bench_function("matrix/invert 16x16 gf5", |bench| {
        bench.iter(|| std::hint::black_box(&g).invert())
    });
}

fn bench_section1(c: &mut Criterion) {
    c.bench_function("section1/dims 1-3 rational", |bench| {
        bench.iter(|| check_section1(std::hint::black_box(&[1, 2, 3]), FieldSpec::Rational))
    });
}

fn bench_axioms(c: &mut Criterion) {
    let (h, _) = builtin("sweedler", FieldSpec::Prime(5)).unwrap();
    let t = OpmonoidalMonad::new(&h);
    c.bench_function("axioms/monad form sweedler gf5 dims 1-2", |bench| {
        bench.iter(|| t.check_star_axioms(std::hint::black_box(&[1, 2])))
    });
    let g = MonoidalComonad::new(&h);
    c.bench_function("axioms/comonad form sweedler gf5 dims 1-2", |bench| {
        bench.iter(|| g.check_axioms(std::hint::black_box(&[1, 2])))
    });
}

fn bench_modcat(c: &mut Criterion) {
    let (h, mods) = builtin("sweedler", FieldSpec::Prime(5)).unwrap();
    c.bench_function("modcat/full report sweedler gf5", |bench| {
        bench.iter(|| star_autonomy_report(&h, std::hint::black_box(&mods)))
    });
    let reg = regular_module(&h);
    c.bench_function("modcat/hom basis regular-regular sweedler gf5", |bench| {
        bench.iter(|| hom_basis(&h, std::hint::black_box(&reg), &reg))
    });
}

criterion_group!(benches, bench_matrix, bench_section1, bench_axioms, bench_modcat);
criterion_main!(benches);
