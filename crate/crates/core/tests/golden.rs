//! Golden serialization formats. These strings are frozen: a change here is
//! a wire-format break for the CLI reports and fixtures.

use weilrep::chevalley::{parse_word, Letter, Root};
use weilrep::cyclotomic::{rat, ratio, Cyclotomic};
use weilrep::hecke::HeckeAlgebra;
use weilrep::schwartz::{CharacterData, SchwartzFunction};
use weilrep::weyl::simple_reflection;

#[test]
fn cyclotomic_forms() {
    let z8 = Cyclotomic::root_of_unity(&ratio(1, 8));
    let x = Cyclotomic::from_rat(ratio(1, 2)).sub(&z8.pow(2).scale(&ratio(1, 2)));
    assert_eq!(
        serde_json::to_string(&x).unwrap(),
        r#"{"level":4,"coeffs":{"0":"1/2","1":"-1/2"}}"#
    );
    assert_eq!(x.to_string(), "1/2 - 1/2*z4");
}

#[test]
fn schwartz_functions() {
    let phi1 = SchwartzFunction::phi_lattice(1, 2, 1);
    assert_eq!(
        serde_json::to_string(&phi1).unwrap(),
        r#"{"p":2,"n":1,"m":1,"N":1,"values":[{"rep":["0"],"val":{"level":1,"coeffs":{"0":"1"}}}]}"#
    );
    let mixed = SchwartzFunction::linear_combine(
        &[Cyclotomic::from_int(-1), Cyclotomic::from_int(2)],
        &[&SchwartzFunction::phi_lattice(0, 2, 1), &phi1],
    );
    assert_eq!(
        serde_json::to_string(&mixed).unwrap(),
        r#"{"p":2,"n":1,"m":0,"N":1,"values":[{"rep":["0"],"val":{"level":1,"coeffs":{"0":"1"}}},{"rep":["1"],"val":{"level":1,"coeffs":{"0":"-1"}}}]}"#
    );
    // the transform is the indicator of 1/2 + Z_2; the in-box zero cell is
    // serialized explicitly
    let cd = CharacterData::standard(2);
    assert_eq!(
        serde_json::to_string(&mixed.fourier_full(&cd)).unwrap(),
        r#"{"p":2,"n":1,"m":-1,"N":0,"values":[{"rep":["0"],"val":{"level":1,"coeffs":{}}},{"rep":["1/2"],"val":{"level":1,"coeffs":{"0":"1"}}}]}"#
    );
}

#[test]
fn group_words_round_trip() {
    let word = vec![
        Letter {
            root: Root::Long { i: 1, neg: false },
            t: rat(2),
        },
        Letter {
            root: Root::Diff { i: 2, j: 1 },
            t: ratio(1, 2),
        },
    ];
    let json = serde_json::to_string(&word).unwrap();
    assert_eq!(json, r#"[{"root":"2l1","t":"2"},{"root":"l2-l1","t":"1/2"}]"#);
    let parsed = parse_word(&serde_json::from_str(&json).unwrap()).unwrap();
    assert_eq!(parsed, word);
}

#[test]
fn weyl_elements() {
    assert_eq!(
        serde_json::to_string(&simple_reflection(0, 2)).unwrap(),
        r#"{"perm":[-1,2],"trans":["1","0"]}"#
    );
}

#[test]
fn hecke_elements() {
    let algebra = HeckeAlgebra::minimal_type(1);
    let t0 = algebra.t_basis(&simple_reflection(0, 1));
    let elem = t0.add(&algebra.unit().scale(&Cyclotomic::root_of_unity(&ratio(1, 4))));
    assert_eq!(
        serde_json::to_string(&elem).unwrap(),
        r#"[{"w":{"perm":[1],"trans":["0"]},"coeff":{"level":4,"coeffs":{"1":"1"}}},{"w":{"perm":[-1],"trans":["1"]},"coeff":{"level":1,"coeffs":{"0":"1"}}}]"#
    );
}

#[test]
fn characters() {
    let cd = CharacterData::standard(2);
    assert_eq!(serde_json::to_string(cd.psi()).unwrap(), r#"{"p":2,"a":"1/2"}"#);
}
