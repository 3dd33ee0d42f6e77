//! Acceptance suite: one test per pinned criterion, each printing a
//! single pass/fail line and enforcing its runtime budget.

use std::process::Command;
use std::time::{Duration, Instant};

use staraut::builtin::builtin;
use staraut::comonadside::{comonad_from_hopf, MonoidalComonad};
use staraut::hopf::sweedler;
use staraut::modcat::{
    hom_basis, regular_module, star_autonomy_report, twisted_dual, validate_module,
};
use staraut::monadside::OpmonoidalMonad;
use staraut::vectcat::{check_section1, VMor, VObj};
use staraut::{FieldSpec, Matrix};

const Q: FieldSpec = FieldSpec::Rational;
const GF5: FieldSpec = FieldSpec::Prime(5);

fn finish(name: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    println!("{name}: pass ({elapsed:.2?})");
    assert!(
        elapsed < budget,
        "{name} exceeded its runtime budget: {elapsed:.2?} >= {budget:?}"
    );
}

#[test]
fn criterion_1_identity_suite() {
    let t = Instant::now();
    let r = check_section1(&[1, 2, 3], Q);
    assert!(r.all_pass(), "{:?}", r.first_failure());
    for needle in [
        "e-triangle",
        "n-triangle",
        "rho-triangle",
        "pi invertible",
    ] {
        assert!(
            r.items.iter().any(|i| i.axiom.contains(needle)),
            "missing item {needle}"
        );
    }
    finish("criterion 1 (identity suite)", t, Duration::from_secs(5));
}

#[test]
fn criterion_2_hopf_validation() {
    let t = Instant::now();
    for field in [Q, GF5] {
        for name in ["c2", "s3", "sweedler"] {
            let (h, _) = builtin(name, field).unwrap();
            let r = h.validate();
            assert!(r.all_pass(), "{name}: {:?}", r.first_failure());
        }
    }
    assert!(sweedler(FieldSpec::Prime(2)).is_err(), "characteristic 2 must be rejected");
    let h = sweedler(Q).unwrap();
    let s2 = h.antipode.mul(&h.antipode).unwrap();
    let s4 = s2.mul(&s2).unwrap();
    assert!(s4.is_identity());
    assert!(!s2.is_identity());
    finish("criterion 2 (Hopf validation)", t, Duration::from_secs(2));
}

#[test]
fn criterion_3_opmonoidal_coherence() {
    let t = Instant::now();
    let (c2, _) = builtin("c2", Q).unwrap();
    let r = OpmonoidalMonad::new(&c2).check_opmonoidal(&[1, 2, 3]);
    assert!(r.all_pass(), "{:?}", r.first_failure());
    let (sw, _) = builtin("sweedler", GF5).unwrap();
    let r = OpmonoidalMonad::new(&sw).check_opmonoidal(&[1, 2, 3]);
    assert!(r.all_pass(), "{:?}", r.first_failure());
    finish("criterion 3 (opmonoidal coherence)", t, Duration::from_secs(10));
}

#[test]
fn criterion_4_monad_form_axioms() {
    let t = Instant::now();
    for (h, _) in [builtin("c2", Q).unwrap(), builtin("sweedler", GF5).unwrap()] {
        let r = OpmonoidalMonad::new(&h).check_star_axioms(&[1, 2]);
        assert!(r.all_pass(), "{}: {:?}", h.name, r.first_failure());
        for axiom in ["Axiom 1", "Axiom 2", "Axiom 4", "Axiom 5", "Axiom 6"] {
            assert!(r.items.iter().any(|i| i.axiom == axiom), "missing {axiom}");
        }
    }
    // sign-mutation fixture: one antipode entry with a flipped sign
    let h = sweedler(Q).unwrap();
    let mut bad = h.antipode.clone();
    bad.set(3, 2, Q.one());
    let broken = OpmonoidalMonad::with_antipode(&h, bad).unwrap();
    let r = broken.check_star_axioms(&[1, 2]);
    let fail = r
        .items
        .iter()
        .find(|i| i.axiom == "Axiom 2" && !i.pass)
        .expect("the sign mutation must fail Axiom 2");
    let w = fail.witness.as_ref().expect("failure carries a witness");
    assert!(!w.difference.is_zero(), "witness difference must be nonzero");
    finish("criterion 4 (monad-form axioms)", t, Duration::from_secs(30));
}

#[test]
fn criterion_5_comonad_form_axioms() {
    let t = Instant::now();
    for (h, _) in [builtin("c2", Q).unwrap(), builtin("sweedler", GF5).unwrap()] {
        let g = comonad_from_hopf(&h);
        let r = g.check_comonad(&[1, 2]);
        assert!(r.all_pass(), "{}: {:?}", h.name, r.first_failure());
        let r = g.check_axioms(&[1, 2]);
        assert!(r.all_pass(), "{}: {:?}", h.name, r.first_failure());
        let r56 = g.check_axioms_5_6(&[1, 2]);
        assert!(r56.all_pass(), "{}: {:?}", h.name, r56.first_failure());
        // the direct Axiom-3 check and the cofree-coalgebra form agree
        // item-for-item (same object tuples, same verdicts)
        let direct: Vec<_> = r
            .items
            .iter()
            .filter(|i| i.axiom == "Axiom 3")
            .collect();
        let cofree: Vec<_> = r
            .items
            .iter()
            .filter(|i| i.axiom == "Axiom 3 (cofree form)")
            .collect();
        assert!(!direct.is_empty());
        assert_eq!(direct.len(), cofree.len());
        for (d, c) in direct.iter().zip(&cofree) {
            assert_eq!(d.objects, c.objects);
            assert_eq!(d.pass, c.pass);
        }
    }
    finish("criterion 5 (comonad-form axioms)", t, Duration::from_secs(60));
}

#[test]
fn criterion_6_round_trip() {
    let t = Instant::now();
    for (h, mods) in [builtin("c2", Q).unwrap(), builtin("sweedler", Q).unwrap()] {
        let g = MonoidalComonad::new(&h);
        for m in &mods {
            let action = VMor {
                dom: g.monad.t_obj(VObj(m.dim)),
                cod: VObj(m.dim),
                mat: m.action.clone(),
            };
            let r = g.check_gtalg_round_trip_on(&m.name, &action);
            assert!(r.all_pass(), "{}/{}: {:?}", h.name, m.name, r.first_failure());
        }
    }
    finish("criterion 6 (round-trip dictionary)", t, Duration::from_secs(2));
}

#[test]
fn criterion_7_nu_recovery() {
    let t = Instant::now();
    for (h, _) in [builtin("c2", Q).unwrap(), builtin("sweedler", GF5).unwrap()] {
        let g = MonoidalComonad::new(&h);
        let r = g.check_nu_star_recovery(&[1, 2]);
        assert!(r.all_pass(), "{}: {:?}", h.name, r.first_failure());
    }
    finish("criterion 7 (nu recovery)", t, Duration::from_secs(10));
}

#[test]
fn criterion_8_main_theorem() {
    let t = Instant::now();
    let (c2, c2_mods) = builtin("c2", Q).unwrap();
    assert_eq!(
        c2_mods.iter().map(|m| m.name.as_str()).collect::<Vec<_>>(),
        ["trivial", "sign", "regular"]
    );
    let r = star_autonomy_report(&c2, &c2_mods);
    assert!(r.all_pass(), "{:?}", r.first_failure());
    for needle in [
        "α intertwines",
        "β intertwines",
        "adjunction triangle",
        "S̄ fully faithful",
        "ω-bijection",
        "Prop ealg",
        "n morphism",
    ] {
        assert!(r.items.iter().any(|i| i.axiom.contains(needle)), "missing {needle}");
    }
    let (sw, sw_mods) = builtin("sweedler", GF5).unwrap();
    assert_eq!(
        sw_mods.iter().map(|m| m.name.as_str()).collect::<Vec<_>>(),
        ["trivial", "regular"]
    );
    let r = star_autonomy_report(&sw, &sw_mods);
    assert!(r.all_pass(), "{:?}", r.first_failure());

    // the untwisted transpose is not a module action at all
    let m = regular_module(&sw);
    let wrong = twisted_dual(&sw, &m, &Matrix::identity(sw.dim, GF5), "T");
    assert!(!validate_module(&sw, &wrong).all_pass());

    // dim hom(regular, regular) for the two-element group algebra
    let (c2, _) = builtin("c2", Q).unwrap();
    let reg = regular_module(&c2);
    assert_eq!(hom_basis(&c2, &reg, &reg).len(), 2);
    finish("criterion 8 (main theorem)", t, Duration::from_secs(120));
}

#[test]
fn criterion_9_determinism() {
    let t = Instant::now();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_staraut"))
            .args([
                "all", "--builtin", "sweedler", "--field", "gf5", "--seed", "7", "--format",
                "json",
            ])
            .output()
            .unwrap()
    };
    let a = run();
    let b = run();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(b.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout, "reports must be byte-identical");
    finish("criterion 9 (determinism)", t, Duration::from_secs(120));
}
