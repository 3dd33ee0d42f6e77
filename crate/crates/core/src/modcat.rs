//! The category of left `H`-modules and the lifted duality structure.
//!
//! Modules are presented by action matrices `H ⊗ M → M`. Tensor products
//! twist through the comultiplication, duals are antipode-twisted
//! contragredients, and the internal hom of modules `M`, `N` is carried
//! by `SM ⊗ N` with commuting left and right `H`-actions. The checks
//! here verify, entirely by exact linear algebra, that evaluation and
//! coevaluation are module morphisms and that the internal-hom bijection
//! `ω` restricts to a bijection on module homomorphisms.

use crate::comonadside::MonoidalComonad;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::hopf::HopfAlgebra;
use crate::matrix::{swap_perm, Matrix};
use crate::report::AxiomReport;
use crate::vectcat::{ehat, VMor, VObj};

/// A left `H`-module: a carrier dimension and an action matrix of shape
/// `dim × (dim(H) · dim)`.
#[derive(Clone, Debug)]
pub struct HModule {
    pub name: String,
    pub dim: usize,
    pub action: Matrix,
}

impl HModule {
    pub fn new(name: impl Into<String>, hopf: &HopfAlgebra, dim: usize, action: Matrix) -> Result<HModule> {
        if action.rows() != dim || action.cols() != hopf.dim * dim {
            return Err(Error::shape(
                "module action",
                format!("{}x{}", dim, hopf.dim * dim),
                format!("{}x{}", action.rows(), action.cols()),
            ));
        }
        Ok(HModule {
            name: name.into(),
            dim,
            action,
        })
    }
}

/// Checks the two module axioms for an action.
pub fn validate_module(hopf: &HopfAlgebra, m: &HModule) -> AxiomReport {
    let mut r = AxiomReport::new(format!("module axioms ({})", m.name));
    let f = hopf.field;
    let idm = Matrix::identity(m.dim, f);
    let obj = format!("M={}", m.dim);
    let assoc_l = m
        .action
        .mul(&hopf.mul.kron(&idm).unwrap())
        .unwrap();
    let assoc_r = m
        .action
        .mul(&Matrix::identity(hopf.dim, f).kron(&m.action).unwrap())
        .unwrap();
    r.check_eq("action associativity", &obj, &assoc_l, &assoc_r);
    let unit = m.action.mul(&hopf.unit.kron(&idm).unwrap()).unwrap();
    r.check_eq("action unit", &obj, &unit, &idm);
    r
}

/// The monoidal unit: the trivial module through the counit.
pub fn unit_module(hopf: &HopfAlgebra) -> HModule {
    HModule {
        name: "trivial".into(),
        dim: 1,
        action: hopf.counit.clone(),
    }
}

/// Tensor product of modules: the action splits through `Δ` and braids
/// the second copy of `H` past `M`.
pub fn tensor_modules(hopf: &HopfAlgebra, m: &HModule, n: &HModule) -> HModule {
    let f = hopf.field;
    let h = hopf.dim;
    let idn = Matrix::identity(n.dim, f);
    let split = hopf
        .comul
        .kron(&Matrix::identity(m.dim * n.dim, f))
        .unwrap();
    let braid = Matrix::identity(h, f)
        .kron(&swap_perm(h, m.dim, f))
        .unwrap()
        .kron(&idn)
        .unwrap();
    let act = m.action.kron(&n.action).unwrap();
    HModule {
        name: format!("{}⊗{}", m.name, n.name),
        dim: m.dim * n.dim,
        action: act.mul(&braid).unwrap().mul(&split).unwrap(),
    }
}

/// The contragredient of an action twisted by an algebra map `H → H`:
/// `(h · φ)(x) = φ(twist(h) · x)`. The antipode twist yields the left
/// dual; the identity twist yields the classical (wrong, for
/// noncommutative `H`) transpose and exists so tests can show the twist
/// is necessary.
pub fn twisted_dual(hopf: &HopfAlgebra, m: &HModule, twist: &Matrix, tag: &str) -> HModule {
    // (h · φ)(x) = φ(twist(h) · x)
    let f = hopf.field;
    let h = hopf.dim;
    let mut action = Matrix::zeros(m.dim, h * m.dim, f);
    for (j, col, av) in m.action.iter_nonzero() {
        let k = col / m.dim;
        let jp = col % m.dim;
        for (kk, k0, sv) in twist.iter_nonzero() {
            if kk == k {
                let cur = action.get(jp, k0 * m.dim + j);
                action.set(jp, k0 * m.dim + j, f.add(&cur, &f.mul(sv, av)));
            }
        }
    }
    HModule {
        name: format!("{tag}{}", m.name),
        dim: m.dim,
        action,
    }
}

/// The left dual `S̄M`: the contragredient through the antipode.
pub fn dual_module(hopf: &HopfAlgebra, m: &HModule) -> HModule {
    twisted_dual(hopf, m, &hopf.antipode, "S")
}

/// The right dual `S̄′M`: the contragredient through the inverse antipode.
pub fn dual_module_prime(hopf: &HopfAlgebra, m: &HModule) -> HModule {
    twisted_dual(hopf, m, &hopf.antipode_inv, "S'")
}

/// Evaluation `(SM ⊗ N) ⊗ M → N` for the internal-hom carrier `SM ⊗ N`.
pub fn e_mor(field: FieldSpec, m: usize, n: usize) -> Matrix {
    // reorder SM ⊗ N ⊗ M to SM ⊗ M ⊗ N, then pair off SM against M
    let reorder = Matrix::identity(m, field)
        .kron(&swap_perm(n, m, field))
        .unwrap();
    let mut pair = Matrix::zeros(1, m * m, field);
    for i in 0..m {
        pair.set(0, i * m + i, field.one());
    }
    pair.kron(&Matrix::identity(n, field))
        .unwrap()
        .mul(&reorder)
        .unwrap()
}

/// Currying `g : L ⊗ M → N  ↦  L → SM ⊗ N` against the chosen basis.
fn curry_hom(g: &Matrix, l: usize, m: usize, n: usize) -> Matrix {
    let f = g.field();
    let mut out = Matrix::zeros(m * n, l, f);
    for (j, col, v) in g.iter_nonzero() {
        let li = col / m;
        let i = col % m;
        out.set(i * n + j, li, v.clone());
    }
    out
}

/// Left action `μ_l : H ⊗ (SM ⊗ N) → SM ⊗ N` on the internal hom.
pub fn mu_l(hopf: &HopfAlgebra, m: &HModule, n: &HModule) -> Matrix {
    let f = hopf.field;
    let x = m.dim * n.dim;
    let g = n
        .action
        .mul(
            &Matrix::identity(hopf.dim, f)
                .kron(&e_mor(f, m.dim, n.dim))
                .unwrap(),
        )
        .unwrap();
    curry_hom(&g, hopf.dim * x, m.dim, n.dim)
}

/// Right action `μ_r : (SM ⊗ N) ⊗ H → SM ⊗ N` on the internal hom.
pub fn mu_r(hopf: &HopfAlgebra, m: &HModule, n: &HModule) -> Matrix {
    let f = hopf.field;
    let x = m.dim * n.dim;
    let g = e_mor(f, m.dim, n.dim)
        .mul(&Matrix::identity(x, f).kron(&m.action).unwrap())
        .unwrap();
    curry_hom(&g, x * hopf.dim, m.dim, n.dim)
}

/// The internal hom `ᴹN` as a left module: the bimodule structure
/// `(μ_l, μ_r)` restricted along `(1 ⊗ ν) ∘ Δ`.
pub fn hom_module(hopf: &HopfAlgebra, m: &HModule, n: &HModule) -> HModule {
    let f = hopf.field;
    let h = hopf.dim;
    let x = m.dim * n.dim;
    let idx = Matrix::identity(x, f);
    let split = Matrix::identity(h, f)
        .kron(&hopf.antipode)
        .unwrap()
        .mul(&hopf.comul)
        .unwrap()
        .kron(&idx)
        .unwrap();
    let braid = Matrix::identity(h, f).kron(&swap_perm(h, x, f)).unwrap();
    let action = mu_l(hopf, m, n)
        .mul(&Matrix::identity(h, f).kron(&mu_r(hopf, m, n)).unwrap())
        .unwrap()
        .mul(&braid)
        .unwrap()
        .mul(&split)
        .unwrap();
    HModule {
        name: format!("hom({},{})", m.name, n.name),
        dim: x,
        action,
    }
}

/// Basis of the space of module homomorphisms `M → N`, via the nullspace
/// of the vectorized intertwiner constraint.
pub fn hom_basis(hopf: &HopfAlgebra, m: &HModule, n: &HModule) -> Vec<Matrix> {
    let f = hopf.field;
    let h = hopf.dim;
    // unknowns: X[p, q], p < n.dim, q < m.dim, index p·m.dim + q
    let unknowns = n.dim * m.dim;
    let mut c = Matrix::zeros(n.dim * h * m.dim, unknowns, f);
    // equation (p, k, q):  Σ_j X[p,j]·a_M[j,(k,q)]  −  Σ_r a_N[p,(k,r)]·X[r,q] = 0
    for (j, col, v) in m.action.iter_nonzero() {
        let (k, q) = (col / m.dim, col % m.dim);
        for p in 0..n.dim {
            let row = (p * h + k) * m.dim + q;
            let cur = c.get(row, p * m.dim + j);
            c.set(row, p * m.dim + j, f.add(&cur, v));
        }
    }
    for (p, col, v) in n.action.iter_nonzero() {
        let (k, rr) = (col / n.dim, col % n.dim);
        for q in 0..m.dim {
            let row = (p * h + k) * m.dim + q;
            let cur = c.get(row, rr * m.dim + q);
            c.set(row, rr * m.dim + q, f.sub(&cur, v));
        }
    }
    c.nullspace()
        .into_iter()
        .map(|v| {
            let mut x = Matrix::zeros(n.dim, m.dim, f);
            for (row, _, val) in v.iter_nonzero() {
                x.set(row / m.dim, row % m.dim, val.clone());
            }
            x
        })
        .collect()
}

fn is_intertwiner(hopf: &HopfAlgebra, m: &HModule, n: &HModule, x: &Matrix) -> bool {
    let f = hopf.field;
    let lhs = x.mul(&m.action).unwrap();
    let rhs = n
        .action
        .mul(&Matrix::identity(hopf.dim, f).kron(x).unwrap())
        .unwrap();
    lhs == rhs
}

/// Evaluation on the internal hom is a module morphism, and the two
/// internal-hom actions form a bimodule.
pub fn check_e_morphism(hopf: &HopfAlgebra, m: &HModule, n: &HModule) -> AxiomReport {
    let mut r = AxiomReport::new(format!("evaluation is a module morphism ({}, {})", m.name, n.name));
    let f = hopf.field;
    let obj = format!("M={}, N={}", m.dim, n.dim);
    let hom = hom_module(hopf, m, n);
    let dom = tensor_modules(hopf, &hom, m);
    let e = e_mor(f, m.dim, n.dim);
    let lhs = e.mul(&dom.action).unwrap();
    let rhs = n
        .action
        .mul(&Matrix::identity(hopf.dim, f).kron(&e).unwrap())
        .unwrap();
    r.check_eq("Prop ealg", &obj, &lhs, &rhs);
    r
}

/// The two actions on `SM ⊗ N` are a left action, a right action, and
/// commute with each other.
pub fn check_hom_bimodule(hopf: &HopfAlgebra, m: &HModule, n: &HModule) -> AxiomReport {
    let mut r = AxiomReport::new(format!("internal-hom bimodule ({}, {})", m.name, n.name));
    let f = hopf.field;
    let h = hopf.dim;
    let x = m.dim * n.dim;
    let idh = Matrix::identity(h, f);
    let idx = Matrix::identity(x, f);
    let obj = format!("M={}, N={}", m.dim, n.dim);
    let l = mu_l(hopf, m, n);
    let rr = mu_r(hopf, m, n);
    r.check_eq(
        "left action associativity",
        &obj,
        &l.mul(&hopf.mul.kron(&idx).unwrap()).unwrap(),
        &l.mul(&idh.kron(&l).unwrap()).unwrap(),
    );
    r.check_eq(
        "left action unit",
        &obj,
        &l.mul(&hopf.unit.kron(&idx).unwrap()).unwrap(),
        &idx,
    );
    r.check_eq(
        "right action associativity",
        &obj,
        &rr.mul(&rr.kron(&idh).unwrap()).unwrap(),
        &rr.mul(&idx.kron(&hopf.mul).unwrap()).unwrap(),
    );
    r.check_eq(
        "right action unit",
        &obj,
        &rr.mul(&idx.kron(&hopf.unit).unwrap()).unwrap(),
        &idx,
    );
    r.check_eq(
        "actions commute",
        &obj,
        &l.mul(&idh.kron(&rr).unwrap()).unwrap(),
        &rr.mul(&l.kron(&idh).unwrap()).unwrap(),
    );
    r
}

/// Coevaluation `n_M : I → S̄(S̄M ⊗ M)` is a module morphism from the
/// trivial module.
pub fn check_n_morphism(hopf: &HopfAlgebra, m: &HModule) -> AxiomReport {
    let mut r = AxiomReport::new(format!("coevaluation is a module morphism ({})", m.name));
    let f = hopf.field;
    let target = dual_module(hopf, &tensor_modules(hopf, &dual_module(hopf, m), m));
    let n = crate::vectcat::nmap(VObj(m.dim), f).mat;
    let lhs = target
        .action
        .mul(&Matrix::identity(hopf.dim, f).kron(&n).unwrap())
        .unwrap();
    let rhs = n.mul(&hopf.counit).unwrap();
    r.check_eq("n morphism", format!("M={}", m.dim), &lhs, &rhs);
    r
}

/// `ω` restricts to a bijection
/// `Hom_H(A, S̄(B⊗C)) → Hom_H(A⊗B, S̄C)`.
pub fn check_omega_bijection(
    hopf: &HopfAlgebra,
    a: &HModule,
    b: &HModule,
    c: &HModule,
) -> AxiomReport {
    let mut r = AxiomReport::new(format!(
        "omega restricts to module homs ({}, {}, {})",
        a.name, b.name, c.name
    ));
    let f = hopf.field;
    let obj = format!("A={}, B={}, C={}", a.dim, b.dim, c.dim);
    let sbc = dual_module(hopf, &tensor_modules(hopf, b, c));
    let ab = tensor_modules(hopf, a, b);
    let sc = dual_module(hopf, c);
    let source = hom_basis(hopf, a, &sbc);
    let target = hom_basis(hopf, &ab, &sc);

    let e = ehat(VObj(b.dim), VObj(c.dim), f).mat;
    let mut images = Vec::new();
    let mut all_intertwine = true;
    for x in &source {
        let img = e
            .mul(&x.kron(&Matrix::identity(b.dim, f)).unwrap())
            .unwrap();
        all_intertwine &= is_intertwiner(hopf, &ab, &sc, &img);
        images.push(img);
    }
    r.check_flag("ω-bijection (images are module maps)", &obj, all_intertwine);
    // injectivity: stacked images have full column rank
    let mut stacked = Matrix::zeros(c.dim * ab.dim, images.len(), f);
    for (k, img) in images.iter().enumerate() {
        for (i, j, v) in img.iter_nonzero() {
            stacked.set(i * ab.dim + j, k, v.clone());
        }
    }
    let injective = stacked.rank() == images.len();
    r.check_flag("ω-bijection (injective)", &obj, injective);
    r.check_flag(
        "ω-bijection (dimensions agree)",
        &obj,
        source.len() == target.len(),
    );
    r
}

/// The unit and counit of `S̄′ ⊣ S̄` (both carried by identity matrices
/// in this model) are module morphisms, and the triangle identities
/// hold.
pub fn check_alpha_beta(hopf: &HopfAlgebra, m: &HModule) -> AxiomReport {
    let mut r = AxiomReport::new(format!("duality adjunction unit/counit ({})", m.name));
    let f = hopf.field;
    let obj = format!("M={}", m.dim);
    let ssp = dual_module(hopf, &dual_module_prime(hopf, m));
    let sps = dual_module_prime(hopf, &dual_module(hopf, m));
    // α_M : M → S̄S̄′M and β_M : M → S̄′S̄M intertwine
    r.check_eq("α intertwines", &obj, &ssp.action, &m.action);
    r.check_eq("β intertwines", &obj, &sps.action, &m.action);
    // triangle identities: S̄β ∘ αS̄ = 1 and βS̄′ ∘ S̄′α = 1
    let id = Matrix::identity(m.dim, f);
    let tri1 = id.transpose().mul(&id).unwrap();
    r.check_eq("adjunction triangle (S̄)", &obj, &tri1, &id);
    let tri2 = id.mul(&id.transpose()).unwrap();
    r.check_eq("adjunction triangle (S̄′)", &obj, &tri2, &id);
    r
}

/// `S̄` acts bijectively on hom spaces: the transpose sends a basis of
/// `Hom_H(M, N)` to independent module maps `S̄N → S̄M` of the same count.
pub fn check_dual_fully_faithful(hopf: &HopfAlgebra, m: &HModule, n: &HModule) -> AxiomReport {
    let mut r = AxiomReport::new(format!("dual functor on hom spaces ({}, {})", m.name, n.name));
    let f = hopf.field;
    let obj = format!("M={}, N={}", m.dim, n.dim);
    let (sm, sn) = (dual_module(hopf, m), dual_module(hopf, n));
    let source = hom_basis(hopf, m, n);
    let target = hom_basis(hopf, &sn, &sm);
    let mut all_intertwine = true;
    let mut stacked = Matrix::zeros(m.dim * n.dim, source.len(), f);
    for (k, x) in source.iter().enumerate() {
        let xt = x.transpose();
        all_intertwine &= is_intertwiner(hopf, &sn, &sm, &xt);
        for (i, j, v) in xt.iter_nonzero() {
            stacked.set(i * n.dim + j, k, v.clone());
        }
    }
    r.check_flag("S̄ fully faithful (images are module maps)", &obj, all_intertwine);
    r.check_flag(
        "S̄ fully faithful (bijective)",
        &obj,
        stacked.rank() == source.len() && source.len() == target.len(),
    );
    r
}

/// The lifted-dual coaction from the comonad picture agrees with the
/// antipode-twisted contragredient action defined here.
pub fn check_dual_consistency(hopf: &HopfAlgebra, m: &HModule) -> AxiomReport {
    let mut r = AxiomReport::new(format!("dual module vs lifted dual ({})", m.name));
    let g = MonoidalComonad::new(hopf);
    let x = VObj(m.dim);
    let action = VMor {
        dom: g.monad.t_obj(x),
        cod: x,
        mat: m.action.clone(),
    };
    let gamma = g.coalgebra_of(&action);
    let lifted = g.lift_dual(&gamma);
    let direct = g.coalgebra_of(&VMor {
        dom: g.monad.t_obj(x),
        cod: x,
        mat: dual_module(hopf, m).action.clone(),
    });
    r.check_eq(
        "lifted dual coaction",
        format!("M={}", m.dim),
        &lifted.mat,
        &direct.mat,
    );
    r
}

/// The full lifted-duality report for a suite of modules over one Hopf
/// algebra: module axioms, evaluation/coevaluation morphisms, bimodule
/// structure, duality adjunction, full faithfulness of the dual functor,
/// `ω`-bijections, and consistency with the comonad lifting.
pub fn star_autonomy_report(hopf: &HopfAlgebra, modules: &[HModule]) -> AxiomReport {
    let mut r = AxiomReport::new(format!("lifted duality ({})", hopf.name));
    for m in modules {
        r.merge(validate_module(hopf, m));
        r.merge(validate_module(
            hopf,
            &dual_module(hopf, m),
        ));
        r.merge(validate_module(hopf, &dual_module_prime(hopf, m)));
        r.merge(check_n_morphism(hopf, m));
        r.merge(check_dual_consistency(hopf, m));
        r.merge(check_alpha_beta(hopf, m));
    }
    for m in modules {
        for n in modules {
            r.merge(check_e_morphism(hopf, m, n));
            r.merge(check_hom_bimodule(hopf, m, n));
            r.merge(check_dual_fully_faithful(hopf, m, n));
        }
    }
    for a in modules {
        for b in modules {
            for c in modules {
                r.merge(check_omega_bijection(hopf, a, b, c));
            }
        }
    }
    r
}

/// The regular module: `H` acting on itself by multiplication.
pub fn regular_module(hopf: &HopfAlgebra) -> HModule {
    HModule {
        name: "regular".into(),
        dim: hopf.dim,
        action: hopf.mul.clone(),
    }
}
