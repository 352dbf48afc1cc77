//! Cohomology dimensions and coboundary values compared against
//! `tests/oracle/golden.json`, produced by the standalone `oracle.py`.

use serde_json::Value;
use yamaguti::cochain::CochainPair;
use yamaguti::cohomology::{cohomology_23, delta_pair, morphism_cohomology_23};
use yamaguti::corpus;
use yamaguti::representation::self_morphism_representation;
use yamaguti::linalg::{q, zero_vec};
use yamaguti::{LieYamagutiAlgebra, Representation};

fn golden() -> Value {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/oracle/golden.json"))
        .expect("golden file");
    serde_json::from_str(&text).expect("golden json")
}

fn dims(v: &Value) -> (usize, usize, usize) {
    let n = |k: &str| v[k].as_u64().expect("count") as usize;
    (n("dim_z"), n("dim_b"), n("dim_h"))
}

#[test]
fn algebra_cohomology_matches_oracle() {
    let g = golden();
    let cases: Vec<(&str, LieYamagutiAlgebra, bool)> = vec![
        ("aff2_adjoint", corpus::affine2(), true),
        ("sl2_adjoint", corpus::sl2(), true),
        ("heisenberg_adjoint", corpus::heisenberg(), true),
        ("aff2_trivial", corpus::affine2(), false),
    ];
    for (name, l, adjoint) in cases {
        let rep = if adjoint {
            Representation::adjoint(&l)
        } else {
            Representation::trivial(&l)
        };
        let r = cohomology_23(&l, &rep).unwrap();
        assert_eq!((r.dim_z, r.dim_b, r.dim_h), dims(&g["algebra"][name]), "{name}");
    }
}

#[test]
fn morphism_cohomology_matches_oracle() {
    let g = golden();
    for (name, phi) in corpus::morphisms() {
        let Some(expect) = g["morphism"].get(name) else {
            continue;
        };
        let r = morphism_cohomology_23(&self_morphism_representation(&phi)).unwrap();
        assert_eq!((r.full.dim_z, r.full.dim_b, r.full.dim_h), dims(expect), "{name}");
    }
}

fn parse_args(key: &str) -> Vec<usize> {
    key.split(',').map(|s| s.parse::<usize>().unwrap() - 1).collect()
}

#[test]
fn pair_coboundary_values_match_oracle() {
    let g = golden();
    let l = corpus::affine2();
    let rep = Representation::adjoint(&l);
    let cases = [
        ("g(1,2,2)=e1", false, vec![0, 1, 1], 0),
        ("g(1,2,1)=e2", false, vec![0, 1, 0], 1),
        ("f(1,2)=e2", true, vec![0, 1], 1),
    ];
    for (name, even, args, out) in cases {
        let mut c = CochainPair::zero(1, 2, 2);
        let mut value = zero_vec(2);
        value[out] = q(1);
        if even {
            c.f.set(&args, &value).unwrap();
        } else {
            c.g.set(&args, &value).unwrap();
        }
        let d = delta_pair(&l, &rep, &c).unwrap();
        for (part, cochain) in [("f", &d.f), ("g", &d.g)] {
            let expect = g["values"][name][part].as_object().unwrap();
            let space = *cochain.space();
            for base in 0..space.bases() {
                let a = space.args_of(base);
                let key: Vec<String> = a.iter().map(|i| (i + 1).to_string()).collect();
                let got: Vec<String> = cochain.evaluate(&a).unwrap().iter().map(|x| x.to_string()).collect();
                let want: Vec<String> = match expect.get(&key.join(",")) {
                    Some(v) => v.as_array().unwrap().iter().map(|s| s.as_str().unwrap().to_string()).collect(),
                    None => vec!["0".into(); 2],
                };
                assert_eq!(got, want, "{name} {part} at {key:?}");
            }
            assert!(expect.keys().all(|k| parse_args(k).len() == space.arity()));
        }
    }
}
