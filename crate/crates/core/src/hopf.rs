//! Finite-dimensional Hopf algebras presented by structure matrices.
//!
//! A Hopf algebra of dimension `d` is given by five matrices over the
//! ambient field: multiplication `d × d²`, unit `d × 1`, comultiplication
//! `d² × d`, counit `1 × d`, and antipode `d × d`. All tensor indices use
//! the same row-major Kronecker convention as the rest of the crate.

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::matrix::{swap_perm, Matrix};
use crate::report::AxiomReport;

#[derive(Clone, Debug)]
pub struct HopfAlgebra {
    pub name: String,
    pub field: FieldSpec,
    pub dim: usize,
    /// `m : H ⊗ H → H`, a `d × d²` matrix.
    pub mul: Matrix,
    /// `u : I → H`, a `d × 1` column.
    pub unit: Matrix,
    /// `Δ : H → H ⊗ H`, a `d² × d` matrix.
    pub comul: Matrix,
    /// `ε : H → I`, a `1 × d` row.
    pub counit: Matrix,
    /// `ν : H → H`, the antipode.
    pub antipode: Matrix,
    /// `ν⁻¹`, computed on construction; a Hopf algebra with singular
    /// antipode is rejected up front.
    pub antipode_inv: Matrix,
}

impl HopfAlgebra {
    /// Shape-checks the presentation and inverts the antipode. Axioms are
    /// not enforced here; run [`HopfAlgebra::validate`] for the full report.
    pub fn new(
        name: impl Into<String>,
        field: FieldSpec,
        mul: Matrix,
        unit: Matrix,
        comul: Matrix,
        counit: Matrix,
        antipode: Matrix,
    ) -> Result<HopfAlgebra> {
        let d = unit.rows();
        let expect = |m: &Matrix, rows: usize, cols: usize, what: &'static str| -> Result<()> {
            if m.rows() != rows || m.cols() != cols {
                return Err(Error::shape(
                    what,
                    format!("{rows}x{cols}"),
                    format!("{}x{}", m.rows(), m.cols()),
                ));
            }
            Ok(())
        };
        expect(&mul, d, d * d, "multiplication")?;
        expect(&unit, d, 1, "unit")?;
        expect(&comul, d * d, d, "comultiplication")?;
        expect(&counit, 1, d, "counit")?;
        expect(&antipode, d, d, "antipode")?;
        let antipode_inv = antipode.invert().map_err(|_| Error::SingularAntipode)?;
        Ok(HopfAlgebra {
            name: name.into(),
            field,
            dim: d,
            mul,
            unit,
            comul,
            counit,
            antipode,
            antipode_inv,
        })
    }

    /// Checks every Hopf algebra axiom and returns the itemized report.
    pub fn validate(&self) -> AxiomReport {
        let mut r = AxiomReport::new(format!("Hopf algebra axioms ({})", self.name));
        let d = self.dim;
        let f = self.field;
        let id = Matrix::identity(d, f);
        let obj = format!("H={d}");
        let k = |a: &Matrix, b: &Matrix| a.kron(b).unwrap();
        let c = |a: &Matrix, b: &Matrix| a.mul(b).unwrap();

        // algebra
        r.check_eq(
            "associativity",
            &obj,
            &c(&self.mul, &k(&self.mul, &id)),
            &c(&self.mul, &k(&id, &self.mul)),
        );
        r.check_eq("left unit", &obj, &c(&self.mul, &k(&self.unit, &id)), &id);
        r.check_eq("right unit", &obj, &c(&self.mul, &k(&id, &self.unit)), &id);

        // coalgebra
        r.check_eq(
            "coassociativity",
            &obj,
            &c(&k(&self.comul, &id), &self.comul),
            &c(&k(&id, &self.comul), &self.comul),
        );
        r.check_eq(
            "left counit",
            &obj,
            &c(&k(&self.counit, &id), &self.comul),
            &id,
        );
        r.check_eq(
            "right counit",
            &obj,
            &c(&k(&id, &self.counit), &self.comul),
            &id,
        );

        // bialgebra compatibility
        let mid_swap = k(&k(&id, &swap_perm(d, d, f)), &id);
        r.check_eq(
            "comultiplication is an algebra map",
            &obj,
            &c(&self.comul, &self.mul),
            &c(
                &k(&self.mul, &self.mul),
                &c(&mid_swap, &k(&self.comul, &self.comul)),
            ),
        );
        r.check_eq(
            "counit is an algebra map",
            &obj,
            &c(&self.counit, &self.mul),
            &k(&self.counit, &self.counit),
        );
        r.check_eq(
            "comultiplication of the unit",
            &obj,
            &c(&self.comul, &self.unit),
            &k(&self.unit, &self.unit),
        );
        r.check_eq(
            "counit of the unit",
            &obj,
            &c(&self.counit, &self.unit),
            &Matrix::identity(1, f),
        );

        // antipode
        let eps_unit = c(&self.unit, &self.counit);
        r.check_eq(
            "left antipode identity",
            &obj,
            &c(&self.mul, &c(&k(&self.antipode, &id), &self.comul)),
            &eps_unit,
        );
        r.check_eq(
            "right antipode identity",
            &obj,
            &c(&self.mul, &c(&k(&id, &self.antipode), &self.comul)),
            &eps_unit,
        );
        r.check_eq(
            "antipode invertible",
            &obj,
            &c(&self.antipode, &self.antipode_inv),
            &id,
        );
        // the inverse antipode is the antipode for the co-opposite
        r.check_eq(
            "inverse antipode identity",
            &obj,
            &c(
                &self.mul,
                &c(
                    &k(&self.antipode_inv, &id),
                    &c(&swap_perm(d, d, f), &self.comul),
                ),
            ),
            &eps_unit,
        );
        // consequences that double as sanity checks on the presentation
        r.check_eq(
            "antipode is an algebra antihomomorphism",
            &obj,
            &c(&self.antipode, &self.mul),
            &c(
                &self.mul,
                &c(&k(&self.antipode, &self.antipode), &swap_perm(d, d, f)),
            ),
        );
        r.check_eq(
            "antipode fixes the unit",
            &obj,
            &c(&self.antipode, &self.unit),
            &self.unit,
        );
        r.check_eq(
            "counit absorbs the antipode",
            &obj,
            &c(&self.counit, &self.antipode),
            &self.counit,
        );
        r.check_eq(
            "antipode is a coalgebra antihomomorphism",
            &obj,
            &c(&self.comul, &self.antipode),
            &c(
                &swap_perm(d, d, f),
                &c(&k(&self.antipode, &self.antipode), &self.comul),
            ),
        );
        r
    }

    /// `validate()` collapsed to a `Result`: the first failing axiom
    /// becomes an error.
    pub fn validated(self) -> Result<HopfAlgebra> {
        let report = self.validate();
        match report.first_failure() {
            None => Ok(self),
            Some(item) => Err(Error::Input {
                path: self.name.clone(),
                message: format!("Hopf axiom failed: {}", item.axiom),
            }),
        }
    }
}

/// The group algebra of a finite group given by its multiplication table
/// (`table[i][j]` = index of the product). Group axioms are checked.
pub fn group_algebra(name: impl Into<String>, field: FieldSpec, table: &[Vec<usize>]) -> Result<HopfAlgebra> {
    let d = table.len();
    if d == 0 {
        return Err(Error::NotAGroup("empty table".into()));
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != d {
            return Err(Error::NotAGroup(format!("row {i} has length {}", row.len())));
        }
        for &v in row {
            if v >= d {
                return Err(Error::NotAGroup(format!("entry {v} out of range in row {i}")));
            }
        }
    }
    // identity element
    let e = (0..d)
        .find(|&e| (0..d).all(|j| table[e][j] == j && table[j][e] == j))
        .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
    // inverses
    let mut inv = vec![0usize; d];
    for i in 0..d {
        inv[i] = (0..d)
            .find(|&j| table[i][j] == e && table[j][i] == e)
            .ok_or_else(|| Error::NotAGroup(format!("element {i} has no inverse")))?;
    }
    // associativity
    for i in 0..d {
        for j in 0..d {
            for l in 0..d {
                if table[table[i][j]][l] != table[i][table[j][l]] {
                    return Err(Error::NotAGroup(format!(
                        "associativity fails at ({i},{j},{l})"
                    )));
                }
            }
        }
    }

    let mut mul = Matrix::zeros(d, d * d, field);
    let mut comul = Matrix::zeros(d * d, d, field);
    let mut counit = Matrix::zeros(1, d, field);
    let mut unit = Matrix::zeros(d, 1, field);
    let mut antipode = Matrix::zeros(d, d, field);
    for i in 0..d {
        for j in 0..d {
            mul.set(table[i][j], i * d + j, field.one());
        }
        comul.set(i * d + i, i, field.one());
        counit.set(0, i, field.one());
        antipode.set(inv[i], i, field.one());
    }
    unit.set(e, 0, field.one());
    HopfAlgebra::new(name, field, mul, unit, comul, counit, antipode)
}

/// The one-dimensional Hopf algebra.
pub fn trivial(field: FieldSpec) -> HopfAlgebra {
    group_algebra("trivial", field, &[vec![0]]).expect("trivial group")
}

/// The group algebra of the cyclic group of order 2.
pub fn cyclic2(field: FieldSpec) -> HopfAlgebra {
    group_algebra("kC2", field, &[vec![0, 1], vec![1, 0]]).expect("C2 is a group")
}

/// The group algebra of the symmetric group on three letters.
pub fn sym3(field: FieldSpec) -> HopfAlgebra {
    let perms: Vec<[usize; 3]> = vec![
        [0, 1, 2],
        [1, 0, 2],
        [0, 2, 1],
        [2, 1, 0],
        [1, 2, 0],
        [2, 0, 1],
    ];
    let compose = |p: &[usize; 3], q: &[usize; 3]| -> [usize; 3] {
        [p[q[0]], p[q[1]], p[q[2]]]
    };
    let table: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| {
            perms
                .iter()
                .map(|q| {
                    let pq = compose(p, q);
                    perms.iter().position(|r| *r == pq).unwrap()
                })
                .collect()
        })
        .collect();
    group_algebra("kS3", field, &table).expect("S3 is a group")
}

/// The four-dimensional Taft algebra with basis `(1, g, x, gx)`: the
/// smallest Hopf algebra whose antipode has order four. Requires
/// characteristic different from 2.
pub fn sweedler(field: FieldSpec) -> Result<HopfAlgebra> {
    if field.characteristic() == 2 {
        return Err(Error::BadCharacteristic(2));
    }
    let d = 4;
    let one = field.one();
    let neg_one = field.from_i64(-1);
    // basis indices
    const E: usize = 0; // 1
    const G: usize = 1; // g
    const X: usize = 2; // x
    const GX: usize = 3; // gx

    // products a·b as (index, sign); None = 0
    let prod = |a: usize, b: usize| -> Option<(usize, bool)> {
        match (a, b) {
            (E, t) => Some((t, false)),
            (s, E) => Some((s, false)),
            (G, G) => Some((E, false)),
            (G, X) => Some((GX, false)),
            (G, GX) => Some((X, false)),
            (X, G) => Some((GX, true)),
            (X, X) => None,
            (X, GX) => None,
            (GX, G) => Some((X, true)),
            (GX, X) => None,
            (GX, GX) => None,
            _ => unreachable!(),
        }
    };

    let mut mul = Matrix::zeros(d, d * d, field);
    for a in 0..d {
        for b in 0..d {
            if let Some((idx, negative)) = prod(a, b) {
                let v = if negative { neg_one.clone() } else { one.clone() };
                mul.set(idx, a * d + b, v);
            }
        }
    }

    let mut unit = Matrix::zeros(d, 1, field);
    unit.set(E, 0, one.clone());

    let mut comul = Matrix::zeros(d * d, d, field);
    // Δ1 = 1⊗1, Δg = g⊗g, Δx = x⊗1 + g⊗x, Δ(gx) = gx⊗g + 1⊗gx
    comul.set(E * d + E, E, one.clone());
    comul.set(G * d + G, G, one.clone());
    comul.set(X * d + E, X, one.clone());
    comul.set(G * d + X, X, one.clone());
    comul.set(GX * d + G, GX, one.clone());
    comul.set(E * d + GX, GX, one.clone());

    let mut counit = Matrix::zeros(1, d, field);
    counit.set(0, E, one.clone());
    counit.set(0, G, one.clone());

    let mut antipode = Matrix::zeros(d, d, field);
    // ν(1) = 1, ν(g) = g, ν(x) = −gx, ν(gx) = x
    antipode.set(E, E, one.clone());
    antipode.set(G, G, one.clone());
    antipode.set(GX, X, neg_one);
    antipode.set(X, GX, one);

    HopfAlgebra::new("sweedler", field, mul, unit, comul, counit, antipode)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rational
    }

    #[test]
    fn builtin_algebras_validate() {
        for h in [trivial(q()), cyclic2(q()), sym3(q()), sweedler(q()).unwrap()] {
            let report = h.validate();
            assert!(report.all_pass(), "{}: {:?}", h.name, report.first_failure());
        }
        let h5 = sweedler(FieldSpec::Prime(5)).unwrap();
        assert!(h5.validate().all_pass());
        let h3 = sym3(FieldSpec::Prime(3));
        assert!(h3.validate().all_pass());
    }

    #[test]
    fn sweedler_rejects_characteristic_two() {
        assert!(matches!(
            sweedler(FieldSpec::Prime(2)),
            Err(Error::BadCharacteristic(2))
        ));
    }

    #[test]
    fn group_algebra_rejects_bad_tables() {
        // not cancellative / no identity
        assert!(group_algebra("bad", q(), &[vec![0, 0], vec![1, 1]]).is_err());
        // out of range
        assert!(group_algebra("bad", q(), &[vec![2]]).is_err());
        // non-associative loop of order 5 (a quasigroup that is not a group)
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            group_algebra("loop5", q(), &t),
            Err(Error::NotAGroup(_))
        ));
    }

    #[test]
    fn group_antipode_is_involutive() {
        for h in [cyclic2(q()), sym3(q())] {
            let s2 = h.antipode.mul(&h.antipode).unwrap();
            assert!(s2.is_identity());
            assert_eq!(h.antipode, h.antipode_inv);
        }
    }

    #[test]
    fn sweedler_antipode_has_order_four() {
        let h = sweedler(q()).unwrap();
        let s2 = h.antipode.mul(&h.antipode).unwrap();
        assert!(!s2.is_identity());
        // ν²(x) = −x
        assert_eq!(s2.get(2, 2), q().from_i64(-1));
        let s4 = s2.mul(&s2).unwrap();
        assert!(s4.is_identity());
        // ν⁻¹ = ν³
        assert_eq!(h.antipode_inv, s2.mul(&h.antipode).unwrap());
    }

    #[test]
    fn antipode_is_unique_convolution_inverse() {
        // Independent oracle: the operator T ↦ m ∘ (T ⊗ 1) ∘ Δ on End(H)
        // is invertible, and the unique solution of L(T) = u∘ε is the
        // antipode. This pins the antipode without using its closed form.
        for h in [cyclic2(q()), sweedler(q()).unwrap()] {
            let d = h.dim;
            let f = h.field;
            let id = Matrix::identity(d, f);
            let mut l = Matrix::zeros(d * d, d * d, f);
            for i in 0..d {
                for j in 0..d {
                    let mut t = Matrix::zeros(d, d, f);
                    t.set(i, j, f.one());
                    let img = h
                        .mul
                        .mul(&t.kron(&id).unwrap())
                        .unwrap()
                        .mul(&h.comul)
                        .unwrap();
                    for (r, c, v) in img.iter_nonzero() {
                        l.set(r * d + c, i * d + j, v.clone());
                    }
                }
            }
            let target = h.unit.mul(&h.counit).unwrap().vec_rows();
            let solution = l.invert().unwrap().mul(&target).unwrap();
            assert_eq!(solution, h.antipode.vec_rows());
        }
    }

    #[test]
    fn validate_catches_mutations() {
        let mut h = sweedler(q()).unwrap();
        // corrupt Δx by dropping the g⊗x term
        h.comul.set(1 * 4 + 2, 2, q().zero());
        let report = h.validate();
        let fail = report.first_failure().expect("mutation must be caught");
        assert!(fail.witness.is_some());
    }
}
