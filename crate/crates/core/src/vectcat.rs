//! The strict monoidal base category: objects are dimensions, morphisms
//! are exact matrices, the tensor is the Kronecker product, and the
//! dualizing object is the unit. The dual functor is the transpose, so
//! the double dual is the identity on the nose and all the internal-hom
//! machinery (evaluation, currying, the `e`/`n` triangles) reduces to
//! exact index bookkeeping that this module pins down once.

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::matrix::{swap_perm, Matrix};
use crate::report::AxiomReport;

/// An object: a finite dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VObj(pub usize);

impl VObj {
    pub fn dim(&self) -> usize {
        self.0
    }

    pub fn tensor(&self, other: VObj) -> VObj {
        VObj(self.0 * other.0)
    }

    pub const UNIT: VObj = VObj(1);
}

/// A morphism: a `cod.dim × dom.dim` matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct VMor {
    pub dom: VObj,
    pub cod: VObj,
    pub mat: Matrix,
}

impl VMor {
    pub fn new(dom: VObj, cod: VObj, mat: Matrix) -> Result<VMor> {
        if mat.rows() != cod.dim() || mat.cols() != dom.dim() {
            return Err(Error::shape(
                "morphism",
                format!("{}x{}", cod.dim(), dom.dim()),
                format!("{}x{}", mat.rows(), mat.cols()),
            ));
        }
        Ok(VMor { dom, cod, mat })
    }

    pub fn identity(x: VObj, field: FieldSpec) -> VMor {
        VMor {
            dom: x,
            cod: x,
            mat: Matrix::identity(x.dim(), field),
        }
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &VMor) -> Result<VMor> {
        if self.dom != other.cod {
            return Err(Error::shape(
                "composition",
                format!("domain {}", self.dom.dim()),
                format!("codomain {}", other.cod.dim()),
            ));
        }
        Ok(VMor {
            dom: other.dom,
            cod: self.cod,
            mat: self.mat.mul(&other.mat)?,
        })
    }

    pub fn tensor(&self, other: &VMor) -> Result<VMor> {
        Ok(VMor {
            dom: self.dom.tensor(other.dom),
            cod: self.cod.tensor(other.cod),
            mat: self.mat.kron(&other.mat)?,
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.mat.field()
    }
}

/// Composes a chain right-to-left: `chain([f, g, h]) = f ∘ g ∘ h`.
pub fn compose_chain(mors: &[&VMor]) -> Result<VMor> {
    let (last, rest) = mors.split_last().expect("nonempty chain");
    let mut acc = (*last).clone();
    for f in rest.iter().rev() {
        acc = f.compose(&acc)?;
    }
    Ok(acc)
}

/// A hom-set viewed as a vector space with its matrix-unit basis in
/// row-major order.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub dom: VObj,
    pub cod: VObj,
    pub basis: Vec<VMor>,
}

pub fn hom_space(dom: VObj, cod: VObj, field: FieldSpec) -> HomSpace {
    let mut basis = Vec::with_capacity(dom.dim() * cod.dim());
    for i in 0..cod.dim() {
        for j in 0..dom.dim() {
            let mut m = Matrix::zeros(cod.dim(), dom.dim(), field);
            m.set(i, j, field.one());
            basis.push(VMor {
                dom,
                cod,
                mat: m,
            });
        }
    }
    HomSpace { dom, cod, basis }
}

/// Dual object: same dimension, dual basis indexed like the original.
pub fn dual_obj(x: VObj) -> VObj {
    x
}

/// Dual (transpose) of a morphism; contravariant and involutive.
pub fn dual_mor(f: &VMor) -> VMor {
    VMor {
        dom: dual_obj(f.cod),
        cod: dual_obj(f.dom),
        mat: f.mat.transpose(),
    }
}

/// Evaluation `SX ⊗ X → I`: the pairing of the dual basis with the basis.
pub fn ev(x: VObj, field: FieldSpec) -> VMor {
    let d = x.dim();
    let mut m = Matrix::zeros(1, d * d, field);
    for i in 0..d {
        m.set(0, i * d + i, field.one());
    }
    VMor {
        dom: dual_obj(x).tensor(x),
        cod: VObj::UNIT,
        mat: m,
    }
}

/// The symmetry `X ⊗ Y → Y ⊗ X`.
pub fn braid(x: VObj, y: VObj, field: FieldSpec) -> VMor {
    VMor {
        dom: x.tensor(y),
        cod: y.tensor(x),
        mat: swap_perm(x.dim(), y.dim(), field),
    }
}

/// Inverse direction of currying: turns `f : A ⊗ B → I` into `A → SB`.
pub fn curry(a: VObj, b: VObj, f: &VMor) -> Result<VMor> {
    if f.dom != a.tensor(b) || f.cod != VObj::UNIT {
        return Err(Error::shape(
            "curry",
            format!("1x{}", a.dim() * b.dim()),
            format!("{}x{}", f.cod.dim(), f.dom.dim()),
        ));
    }
    let field = f.field();
    let mut m = Matrix::zeros(b.dim(), a.dim(), field);
    for (_, col, v) in f.mat.iter_nonzero() {
        let (i, j) = (col / b.dim(), col % b.dim());
        m.set(j, i, v.clone());
    }
    VMor::new(a, dual_obj(b), m)
}

/// Currying forward: turns `g : A → SB` into `ev(B) ∘ (g ⊗ 1_B) : A ⊗ B → I`.
pub fn uncurry(a: VObj, b: VObj, g: &VMor) -> Result<VMor> {
    if g.dom != a || g.cod != dual_obj(b) {
        return Err(Error::shape(
            "uncurry",
            format!("{}x{}", b.dim(), a.dim()),
            format!("{}x{}", g.cod.dim(), g.dom.dim()),
        ));
    }
    let field = g.field();
    ev(b, field).compose(&g.tensor(&VMor::identity(b, field))?)
}

/// The partial evaluation `S(B ⊗ C) ⊗ B → SC`: feed the `B` argument into
/// a functional on `B ⊗ C`.
pub fn ehat(b: VObj, c: VObj, field: FieldSpec) -> VMor {
    let (bd, cd) = (b.dim(), c.dim());
    let mut m = Matrix::zeros(cd, bd * cd * bd, field);
    for i in 0..bd {
        for j in 0..cd {
            // functional index (i,j), argument index i; output index j
            m.set(j, (i * cd + j) * bd + i, field.one());
        }
    }
    VMor {
        dom: dual_obj(b.tensor(c)).tensor(b),
        cod: dual_obj(c),
        mat: m,
    }
}

/// Mirror-handed partial evaluation `B ⊗ S(C ⊗ B) → SC`: feed the trailing
/// `B` argument from the left.
pub fn right_ehat(b: VObj, c: VObj, field: FieldSpec) -> VMor {
    let (bd, cd) = (b.dim(), c.dim());
    let mut m = Matrix::zeros(cd, bd * cd * bd, field);
    for i in 0..cd {
        for j in 0..bd {
            // argument index j, functional index (i,j); output index i
            m.set(i, j * (cd * bd) + i * bd + j, field.one());
        }
    }
    VMor {
        dom: b.tensor(dual_obj(c.tensor(b))),
        cod: dual_obj(c),
        mat: m,
    }
}

/// `ω`: sends `f : A → S(B ⊗ C)` to `ehat(B,C) ∘ (f ⊗ 1_B) : A ⊗ B → SC`.
pub fn omega_map(_a: VObj, b: VObj, c: VObj, f: &VMor) -> Result<VMor> {
    let field = f.field();
    ehat(b, c, field).compose(&f.tensor(&VMor::identity(b, field))?)
}

/// The coevaluation-style point `n_B : I → S(SB ⊗ B)`.
pub fn nmap(b: VObj, field: FieldSpec) -> VMor {
    let d = b.dim();
    let mut m = Matrix::zeros(d * d, 1, field);
    for i in 0..d {
        m.set(i * d + i, 0, field.one());
    }
    VMor {
        dom: VObj::UNIT,
        cod: dual_obj(dual_obj(b).tensor(b)),
        mat: m,
    }
}

/// `ρ`: sends `f : A → SB` to `S(f ⊗ 1_B) ∘ n_B : I → S(A ⊗ B)`.
pub fn rho_map(_a: VObj, b: VObj, f: &VMor) -> Result<VMor> {
    let field = f.field();
    let fb = f.tensor(&VMor::identity(b, field))?;
    dual_mor(&fb).compose(&nmap(b, field))
}

/// `π`: sends `f : A ⊗ B → C` to `ehat(A,B) ∘ (Sf ⊗ 1_A) : SC ⊗ A → SB`.
pub fn pi_map(a: VObj, b: VObj, _c: VObj, f: &VMor) -> Result<VMor> {
    let field = f.field();
    ehat(a, b, field).compose(&dual_mor(f).tensor(&VMor::identity(a, field))?)
}

/// Unit and counit of the self-adjunction of the dual functor; in the
/// transpose model both are identities.
pub fn alpha_beta(a: VObj, field: FieldSpec) -> (VMor, VMor) {
    (VMor::identity(a, field), VMor::identity(a, field))
}

/// Runs the full identity suite for the internal-hom calculus over every
/// object combination drawn from `dims`. Failures are reported, never
/// thrown.
pub fn check_section1(dims: &[usize], field: FieldSpec) -> AxiomReport {
    check_section1_with_ehat(dims, field, &|b, c| ehat(b, c, field))
}

/// Same suite with a replaceable partial-evaluation map, so tests can
/// verify that a corrupted `ehat` is caught with a witness.
pub fn check_section1_with_ehat(
    dims: &[usize],
    field: FieldSpec,
    ehat_fn: &dyn Fn(VObj, VObj) -> VMor,
) -> AxiomReport {
    let mut report = AxiomReport::new("internal-hom identity suite");
    let omega = |_a: VObj, b: VObj, c: VObj, f: &VMor| -> VMor {
        ehat_fn(b, c)
            .compose(&f.tensor(&VMor::identity(b, field)).unwrap())
            .unwrap()
    };
    let objs: Vec<VObj> = dims.iter().map(|&d| VObj(d)).collect();
    let unit = VObj::UNIT;

    for &b in &objs {
        for &c in &objs {
            // e-triangle: e_{B⊗C} = e_C ∘ (e_{B,C} ⊗ 1_C).
            let lhs = ev(b.tensor(c), field);
            let rhs = ev(c, field)
                .compose(&ehat_fn(b, c).tensor(&VMor::identity(c, field)).unwrap())
                .unwrap();
            report.check_eq("e-triangle", format!("B={}, C={}", b.dim(), c.dim()), &lhs.mat, &rhs.mat);
        }
        // n-triangle: e_{SB,B} ∘ (n_B ⊗ 1_{SB}) = 1_{SB}.
        let sb = dual_obj(b);
        let lhs = ehat_fn(sb, b)
            .compose(&nmap(b, field).tensor(&VMor::identity(sb, field)).unwrap())
            .unwrap();
        report.check_eq(
            "n-triangle",
            format!("B={}", b.dim()),
            &lhs.mat,
            &VMor::identity(sb, field).mat,
        );
        // unit laws of the partial evaluation
        report.check_eq(
            "ehat unit (left)",
            format!("C={}", b.dim()),
            &ehat_fn(unit, b).mat,
            &VMor::identity(dual_obj(b), field).mat,
        );
        report.check_eq(
            "ehat unit (right)",
            format!("B={}", b.dim()),
            &ehat_fn(b, unit).mat,
            &ev(b, field).mat,
        );
    }

    for &a in &objs {
        for &b in &objs {
            for &c in &objs {
                // Prop 1 triangle on the hom basis of C(I, S(A⊗B⊗C)).
                let abc = a.tensor(b).tensor(c);
                for f in &hom_space(unit, dual_obj(abc), field).basis {
                    let lhs = omega(a, b, c, &omega(unit, a, b.tensor(c), f));
                    let rhs = omega(unit, a.tensor(b), c, f);
                    report.check_eq(
                        "Prop 1 triangle",
                        format!("A={}, B={}, C={}", a.dim(), b.dim(), c.dim()),
                        &lhs.mat,
                        &rhs.mat,
                    );
                }
                // Cor 2(i): ρ_{A⊗B,C} ∘ ω_{A,B,C} = ρ_{A,B⊗C} on C(A, S(B⊗C)).
                for f in &hom_space(a, dual_obj(b.tensor(c)), field).basis {
                    let lhs = rho_map(a.tensor(b), c, &omega(a, b, c, f)).unwrap();
                    let rhs = rho_map(a, b.tensor(c), f).unwrap();
                    report.check_eq(
                        "Cor 2(i) rho-triangle",
                        format!("A={}, B={}, C={}", a.dim(), b.dim(), c.dim()),
                        &lhs.mat,
                        &rhs.mat,
                    );
                }
            }
            // Cor 2(ii): S(e_{A,B} ⊗ 1_B) ∘ n_B = n_{A⊗B}.
            let eab1 = ehat_fn(a, b).tensor(&VMor::identity(b, field)).unwrap();
            let lhs = dual_mor(&eab1).compose(&nmap(b, field)).unwrap();
            let rhs = nmap(a.tensor(b), field);
            report.check_eq(
                "Cor 2(ii) n-naturality",
                format!("A={}, B={}", a.dim(), b.dim()),
                &lhs.mat,
                &rhs.mat,
            );
        }
        // Cor 2(iii): S(e_A) ∘ n_I = n_A.
        let lhs = dual_mor(&ev(a, field)).compose(&nmap(unit, field)).unwrap();
        report.check_eq(
            "Cor 2(iii) n-from-unit",
            format!("A={}", a.dim()),
            &lhs.mat,
            &nmap(a, field).mat,
        );
    }

    // Prop 3: the inverse of currying at the unit factors through n_I and S.
    for &b in &objs {
        for f in &hom_space(b, unit, field).basis {
            let candidate = dual_mor(f).compose(&nmap(unit, field)).unwrap(); // I → SB
            let lhs = uncurry(unit, b, &candidate).unwrap();
            report.check_eq("Prop 3", format!("B={}", b.dim()), &lhs.mat, &f.mat);
        }
    }

    // Corollary after Prop 3: the general curry inverse via n_I and ehat.
    for &a in &objs {
        for &b in &objs {
            for g in &hom_space(a.tensor(b), unit, field).basis {
                let point = dual_mor(g).compose(&nmap(unit, field)).unwrap(); // I → S(A⊗B)
                let lhs = ehat_fn(a, b)
                    .compose(&point.tensor(&VMor::identity(a, field)).unwrap())
                    .unwrap();
                let rhs = curry(a, b, g).unwrap();
                report.check_eq(
                    "Prop 3 corollary (curry inverse)",
                    format!("A={}, B={}", a.dim(), b.dim()),
                    &lhs.mat,
                    &rhs.mat,
                );
            }
        }
    }

    // π is invertible iff the dual functor is fully faithful; both sides
    // are computed independently and must agree (and both hold here).
    for &a in &objs {
        for &b in &objs {
            for &c in &objs {
                let src = hom_space(a.tensor(b), c, field);
                let n = src.basis.len();
                let mut columns = Matrix::zeros(
                    dual_obj(b).dim() * (dual_obj(c).dim() * a.dim()),
                    n,
                    field,
                );
                for (k, f) in src.basis.iter().enumerate() {
                    let img = pi_map(a, b, c, f).unwrap();
                    for (i, j, v) in img.mat.iter_nonzero() {
                        columns.set(i * img.mat.cols() + j, k, v.clone());
                    }
                }
                let pi_invertible = columns.rank() == n && columns.rows() == n;
                // S on hom-sets C(B,C) → C(SC,SB) as an independent rank check.
                let hom_bc = hom_space(b, c, field);
                let m = hom_bc.basis.len();
                let mut s_matrix = Matrix::zeros(m, m, field);
                for (k, f) in hom_bc.basis.iter().enumerate() {
                    let img = dual_mor(f);
                    for (i, j, v) in img.mat.iter_nonzero() {
                        s_matrix.set(i * img.mat.cols() + j, k, v.clone());
                    }
                }
                let s_fully_faithful = s_matrix.rank() == m;
                report.check_flag(
                    "pi invertible iff S fully faithful",
                    format!("A={}, B={}, C={}", a.dim(), b.dim(), c.dim()),
                    pi_invertible == s_fully_faithful && pi_invertible,
                );
            }
        }
    }

    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rational
    }

    #[test]
    fn dual_is_transpose_involution() {
        let f = VMor::new(VObj(2), VObj(2), Matrix::from_i64(q(), &[&[1, 2], &[3, 4]])).unwrap();
        let ft = dual_mor(&f);
        assert_eq!(ft.mat, Matrix::from_i64(q(), &[&[1, 3], &[2, 4]]));
        assert_eq!(dual_mor(&ft), f);
        let id = VMor::identity(VObj(3), q());
        assert_eq!(dual_mor(&id), id);
    }

    #[test]
    fn ev_values() {
        assert_eq!(ev(VObj::UNIT, q()).mat, Matrix::from_i64(q(), &[&[1]]));
        assert_eq!(ev(VObj(2), q()).mat, Matrix::from_i64(q(), &[&[1, 0, 0, 1]]));
    }

    #[test]
    fn curry_uncurry_round_trip() {
        let (a, b) = (VObj(2), VObj(3));
        for f in &hom_space(a.tensor(b), VObj::UNIT, q()).basis {
            let g = curry(a, b, f).unwrap();
            assert_eq!(uncurry(a, b, &g).unwrap(), *f);
        }
        for g in &hom_space(a, dual_obj(b), q()).basis {
            let f = uncurry(a, b, g).unwrap();
            assert_eq!(curry(a, b, &f).unwrap(), *g);
        }
    }

    #[test]
    fn curry_at_unit_is_reshape_identity() {
        // With a 1-dimensional second factor, currying is the plain transpose
        // of a row vector.
        let a = VObj(3);
        for f in &hom_space(a, VObj::UNIT, q()).basis {
            let g = curry(a, VObj::UNIT, f).unwrap();
            assert_eq!(g.mat, f.mat);
        }
    }

    #[test]
    fn uncurry_identity_gives_ev() {
        let b = VObj(3);
        let id = VMor::identity(dual_obj(b), q());
        assert_eq!(uncurry(dual_obj(b), b, &id).unwrap(), ev(b, q()));
    }

    #[test]
    fn ehat_expected_values() {
        assert_eq!(
            ehat(VObj::UNIT, VObj(4), q()).mat,
            Matrix::identity(4, q())
        );
        assert_eq!(ehat(VObj(2), VObj::UNIT, q()).mat, ev(VObj(2), q()).mat);
        assert_eq!(
            ehat(VObj(2), VObj::UNIT, q()).mat,
            Matrix::from_i64(q(), &[&[1, 0, 0, 1]])
        );
    }

    #[test]
    fn ehat_solves_triangle_uniquely() {
        // Independent oracle: solve e_C ∘ (X ⊗ 1_C) = e_{B⊗C} for X by
        // exact linear algebra and compare with the closed form.
        let (b, c) = (VObj(2), VObj(3));
        let field = q();
        let target = ev(b.tensor(c), field);
        let rows = c.dim();
        let cols = b.dim() * c.dim() * b.dim();
        // Constraint per (u, j): X[j, u] = target[0, pair(u, j)]
        let mut x = Matrix::zeros(rows, cols, field);
        for u in 0..cols {
            let i = u / (c.dim() * b.dim());
            let jj = (u / b.dim()) % c.dim();
            let i2 = u % b.dim();
            for j in 0..rows {
                let col = (i * c.dim() + jj) * (b.dim() * c.dim()) + (i2 * c.dim() + j);
                x.set(j, u, target.mat.get(0, col));
            }
        }
        assert_eq!(x, ehat(b, c, field).mat);
    }

    #[test]
    fn omega_unit_cases() {
        let (a, c) = (VObj(2), VObj(3));
        for f in &hom_space(a, dual_obj(c), q()).basis {
            let out = omega_map(a, VObj::UNIT, c, f).unwrap();
            assert_eq!(out, *f);
        }
    }

    #[test]
    fn nmap_values() {
        assert_eq!(nmap(VObj::UNIT, q()).mat, Matrix::from_i64(q(), &[&[1]]));
        assert_eq!(
            nmap(VObj(2), q()).mat,
            Matrix::from_i64(q(), &[&[1], &[0], &[0], &[1]])
        );
    }

    #[test]
    fn rho_inverts_omega_at_unit() {
        let (a, b) = (VObj(2), VObj(2));
        for f in &hom_space(VObj::UNIT, dual_obj(a.tensor(b)), q()).basis {
            let g = omega_map(VObj::UNIT, a, b, f).unwrap();
            let back = rho_map(a, b, &g).unwrap();
            assert_eq!(back, *f);
        }
    }

    #[test]
    fn dinaturality_of_ev() {
        // ev(X) ∘ (Sf ⊗ 1_X) = ev(Y) ∘ (1_SY ⊗ f) for f : X → Y.
        let (x, y) = (VObj(2), VObj(3));
        for f in &hom_space(x, y, q()).basis {
            let lhs = ev(x, q())
                .compose(&dual_mor(f).tensor(&VMor::identity(x, q())).unwrap())
                .unwrap();
            let rhs = ev(y, q())
                .compose(&VMor::identity(dual_obj(y), q()).tensor(f).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn section1_passes_on_unit() {
        let report = check_section1(&[1], q());
        assert!(report.all_pass());
    }

    #[test]
    fn section1_mutation_caught() {
        let field = q();
        let broken = |b: VObj, c: VObj| {
            let mut e = ehat(b, c, field);
            if b.dim() >= 2 && c.dim() >= 2 {
                let v = e.mat.get(0, 0);
                let flipped = if v.is_zero() {
                    field.one()
                } else {
                    field.neg(&v)
                };
                e.mat.set(0, 0, flipped);
            }
            e
        };
        let report = check_section1_with_ehat(&[1, 2], field, &broken);
        let failure = report.first_failure().expect("mutation must be caught");
        assert!(failure.axiom.contains("e-triangle") || failure.axiom.contains("triangle"));
        assert!(failure.witness.is_some());
    }
}
