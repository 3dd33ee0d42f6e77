//! Named example Hopf algebras with their standard module suites.

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::hopf::{cyclic2, sweedler, sym3, HopfAlgebra};
use crate::matrix::Matrix;
use crate::modcat::{regular_module, unit_module, HModule};

/// A one-dimensional module given by a character (an algebra map to the
/// ground field, here specified by its values on the basis).
pub fn character_module(hopf: &HopfAlgebra, name: &str, values: &[i64]) -> Result<HModule> {
    let f = hopf.field;
    let mut a = Matrix::zeros(1, hopf.dim, f);
    for (i, &v) in values.iter().enumerate() {
        a.set(0, i, f.from_i64(v));
    }
    HModule::new(name, hopf, 1, a)
}

/// Names accepted by [`builtin`].
pub const BUILTIN_NAMES: [&str; 3] = ["c2", "s3", "sweedler"];

/// A named example: the Hopf algebra and its standard module suite.
pub fn builtin(name: &str, field: FieldSpec) -> Result<(HopfAlgebra, Vec<HModule>)> {
    match name.to_ascii_lowercase().as_str() {
        "c2" => {
            let h = cyclic2(field);
            let sign = character_module(&h, "sign", &[1, -1])?;
            let mods = vec![unit_module(&h), sign, regular_module(&h)];
            Ok((h, mods))
        }
        "s3" => {
            let h = sym3(field);
            // signs of the permutations in the order fixed by the table
            let sign = character_module(&h, "sign", &[1, -1, -1, -1, 1, 1])?;
            let mods = vec![unit_module(&h), sign, regular_module(&h)];
            Ok((h, mods))
        }
        "sweedler" => {
            let h = sweedler(field)?;
            let mods = vec![unit_module(&h), regular_module(&h)];
            Ok((h, mods))
        }
        other => Err(Error::Input {
            path: "builtin".into(),
            message: format!("unknown builtin `{other}`; expected one of {BUILTIN_NAMES:?}"),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modcat::validate_module;

    #[test]
    fn builtin_suites_are_valid() {
        for name in BUILTIN_NAMES {
            let (h, mods) = builtin(name, FieldSpec::Rational).unwrap();
            assert!(h.validate().all_pass(), "{name}");
            for m in &mods {
                assert!(validate_module(&h, m).all_pass(), "{name}/{}", m.name);
            }
        }
    }

    #[test]
    fn sign_character_is_multiplicative() {
        // oracle: a character must satisfy χ(gh) = χ(g)χ(h) on the table
        let (h, mods) = builtin("s3", FieldSpec::Rational).unwrap();
        let sign = &mods[1];
        // χ∘m = χ⊗χ as 1×36 matrices; the action of a 1-dim module is χ itself
        let chi = sign.action.clone();
        assert_eq!(chi.mul(&h.mul).unwrap(), chi.kron(&chi).unwrap());
    }

    #[test]
    fn unknown_builtin_rejected() {
        assert!(builtin("nope", FieldSpec::Rational).is_err());
    }
}
