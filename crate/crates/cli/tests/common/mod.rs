//! The CLI test corpus: how each input file is built, and the table of
//! command lines with their expected exit codes.

#![allow(dead_code)]

use std::path::{Path, PathBuf};

use yamaguti::cochain::{MorphismCochain23, MorphismShape};
use yamaguti::cohomology::{morphism_cohomology_23, morphism_d1, morphism_differential};
use yamaguti::corpus;
use yamaguti::deformation::{apply_equivalence, EquivalenceData, FormalDeformation};
use yamaguti::extension::{canonical_section, extension_cocycles, extension_from_cocycle, twisting_defect, Section};
use yamaguti::linalg::{is_zero_vec, q, vec_add, vec_sub, zero_vec};
use yamaguti::model::{serialize_model, Base, CochainModel, IsoModel, Model};
use yamaguti::representation::self_morphism_representation;
use yamaguti::{LieYamagutiAlgebra, Matrix, MorphismLYA, Rational, Representation, Subspace};

pub fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn corpus_dir() -> PathBuf {
    crate_dir().join("tests/corpus")
}

pub fn golden_dir() -> PathBuf {
    crate_dir().join("tests/golden")
}

/// `(golden name, arguments after the binary name, expected exit code)`.
/// File arguments are relative to the crate directory.
pub fn cases() -> Vec<(&'static str, Vec<&'static str>, i32)> {
    vec![
        ("check_algebra_abelian2", vec!["check", "algebra", "tests/corpus/abelian2.json"], 0),
        ("check_algebra_aff2", vec!["check", "algebra", "tests/corpus/aff2.json"], 0),
        ("check_algebra_sl2", vec!["check", "algebra", "tests/corpus/sl2.json"], 0),
        ("check_algebra_heisenberg", vec!["check", "algebra", "tests/corpus/heisenberg.json"], 0),
        ("check_algebra_sl2_lts", vec!["check", "algebra", "tests/corpus/sl2_lts.json"], 0),
        ("check_algebra_nonskew", vec!["check", "algebra", "tests/corpus/nonskew.json"], 1),
        ("check_algebra_wrong_kind", vec!["check", "algebra", "tests/corpus/id_aff2.json"], 2),
        ("check_algebra_missing", vec!["check", "algebra", "tests/corpus/missing.json"], 2),
        ("check_algebra_syntax", vec!["check", "algebra", "tests/corpus/syntax_error.json"], 2),
        ("check_algebra_noncanonical", vec!["check", "algebra", "tests/corpus/noncanonical.json"], 2),
        ("check_algebra_bad_rational", vec!["check", "algebra", "tests/corpus/bad_rational.json"], 2),
        ("check_morphism_id_aff2", vec!["check", "morphism", "tests/corpus/id_aff2.json"], 0),
        ("check_morphism_line", vec!["check", "morphism", "tests/corpus/line_into_aff2.json"], 0),
        ("check_morphism_projection", vec!["check", "morphism", "tests/corpus/heisenberg_projection.json"], 0),
        ("check_morphism_bad", vec!["check", "morphism", "tests/corpus/not_morphism.json"], 1),
        ("check_rep_adjoint", vec!["check", "rep", "tests/corpus/adjoint_aff2.json"], 0),
        ("check_rep_trivial", vec!["check", "rep", "tests/corpus/trivial_aff2.json"], 0),
        ("check_rep_lone_d", vec!["check", "rep", "tests/corpus/lone_d.json"], 1),
        ("check_mrep_self", vec!["check", "mrep", "tests/corpus/self_aff2.json"], 0),
        ("check_mrep_bad", vec!["check", "mrep", "tests/corpus/bad_mrep.json"], 1),
        ("check_extension_aff2", vec!["check", "extension", "tests/corpus/ext_aff2.json"], 0),
        ("check_extension_bad", vec!["check", "extension", "tests/corpus/ext_bad.json"], 1),
        ("cohomology_algebra_aff2", vec!["cohomology", "algebra", "tests/corpus/aff2.json", "--rep", "adjoint"], 0),
        (
            "cohomology_algebra_aff2_trivial",
            vec!["cohomology", "algebra", "tests/corpus/aff2.json", "--rep", "trivial"],
            0,
        ),
        (
            "cohomology_algebra_abelian2_trivial",
            vec!["cohomology", "algebra", "tests/corpus/abelian2.json", "--rep", "trivial", "--certificates"],
            0,
        ),
        (
            "cohomology_algebra_aff2_file",
            vec![
                "cohomology",
                "algebra",
                "tests/corpus/aff2.json",
                "--rep",
                "tests/corpus/adjoint_aff2.json",
                "--certificates",
            ],
            0,
        ),
        ("cohomology_algebra_sl2", vec!["cohomology", "algebra", "tests/corpus/sl2.json"], 0),
        ("cohomology_algebra_heisenberg", vec!["cohomology", "algebra", "tests/corpus/heisenberg.json"], 0),
        ("cohomology_algebra_nonskew", vec!["cohomology", "algebra", "tests/corpus/nonskew.json"], 1),
        (
            "cohomology_algebra_rep_mismatch",
            vec!["cohomology", "algebra", "tests/corpus/sl2.json", "--rep", "tests/corpus/adjoint_aff2.json"],
            2,
        ),
        ("cohomology_morphism_id_dim1", vec!["cohomology", "morphism", "tests/corpus/id_dim1.json"], 0),
        ("cohomology_morphism_zero_abelian2", vec!["cohomology", "morphism", "tests/corpus/zero_abelian2.json"], 0),
        (
            "cohomology_morphism_id_aff2",
            vec!["cohomology", "morphism", "tests/corpus/id_aff2.json", "--certificates"],
            0,
        ),
        (
            "cohomology_morphism_zero_aff2_simple",
            vec!["cohomology", "morphism", "tests/corpus/zero_aff2.json", "--simple"],
            0,
        ),
        ("cohomology_morphism_line", vec!["cohomology", "morphism", "tests/corpus/line_into_aff2.json"], 0),
        (
            "cohomology_morphism_projection",
            vec!["cohomology", "morphism", "tests/corpus/heisenberg_projection.json"],
            0,
        ),
        ("cohomology_morphism_id_sl2", vec!["cohomology", "morphism", "tests/corpus/id_sl2.json"], 0),
        ("cohomology_morphism_id_heisenberg", vec!["cohomology", "morphism", "tests/corpus/id_heisenberg.json"], 0),
        ("cohomology_morphism_mrep", vec!["cohomology", "morphism", "tests/corpus/self_aff2.json"], 0),
        ("cohomology_morphism_bad", vec!["cohomology", "morphism", "tests/corpus/not_morphism.json"], 1),
        ("deform_verify_trivial", vec!["deform", "verify", "tests/corpus/trivial_deformation_aff2.json"], 0),
        ("deform_verify_equivalent", vec!["deform", "verify", "tests/corpus/equiv_sl2.json"], 0),
        ("deform_verify_bad", vec!["deform", "verify", "tests/corpus/bad_perturbation.json"], 1),
        ("deform_infinitesimal_trivial", vec!["deform", "infinitesimal", "tests/corpus/trivial_deformation_aff2.json"], 0),
        ("deform_infinitesimal_equivalent", vec!["deform", "infinitesimal", "tests/corpus/equiv_sl2.json"], 0),
        ("deform_infinitesimal_nontrivial", vec!["deform", "infinitesimal", "tests/corpus/nontrivial_zero_aff2.json"], 0),
        ("deform_infinitesimal_bad", vec!["deform", "infinitesimal", "tests/corpus/bad_perturbation.json"], 1),
        ("deform_reduce_equivalent", vec!["deform", "reduce", "tests/corpus/equiv_sl2.json"], 0),
        ("deform_reduce_nontrivial", vec!["deform", "reduce", "tests/corpus/nontrivial_zero_aff2.json"], 0),
        ("deform_reduce_trivial", vec!["deform", "reduce", "tests/corpus/trivial_deformation_aff2.json"], 0),
        ("rigidity_id_dim1", vec!["rigidity", "tests/corpus/id_dim1.json"], 0),
        ("rigidity_id_aff2", vec!["rigidity", "tests/corpus/id_aff2.json"], 0),
        ("rigidity_zero_abelian2", vec!["rigidity", "tests/corpus/zero_abelian2.json"], 0),
        ("rigidity_bad", vec!["rigidity", "tests/corpus/not_morphism.json"], 1),
        ("rigidity_wrong_kind", vec!["rigidity", "tests/corpus/aff2.json"], 2),
        ("ext_build_aff2", vec!["ext", "build", "tests/corpus/cocycle_aff2.json"], 0),
        ("ext_build_noncocycle", vec!["ext", "build", "tests/corpus/noncocycle_aff2.json"], 1),
        ("ext_build_untwistable", vec!["ext", "build", "tests/corpus/untwistable_heisenberg.json"], 1),
        ("ext_cocycle_aff2", vec!["ext", "cocycle", "tests/corpus/ext_aff2.json"], 0),
        (
            "ext_cocycle_aff2_section",
            vec!["ext", "cocycle", "tests/corpus/ext_aff2.json", "--section", "tests/corpus/section_aff2.json"],
            0,
        ),
        ("ext_cocycle_bad", vec!["ext", "cocycle", "tests/corpus/ext_bad.json"], 1),
        ("ext_iso_given", vec!["ext", "iso", "tests/corpus/iso_aff2.json"], 0),
        ("ext_iso_solved", vec!["ext", "iso", "tests/corpus/iso_aff2_solve.json"], 0),
        ("ext_iso_noncohomologous", vec!["ext", "iso", "tests/corpus/iso_noncohomologous.json"], 1),
        ("usage_unknown_command", vec!["frobnicate"], 2),
        ("usage_missing_file", vec!["check", "algebra"], 2),
    ]
}

pub fn argv(args: &[&str]) -> Vec<String> {
    std::iter::once("yamaguti").chain(args.iter().copied()).map(String::from).collect()
}

/// Runs a case in-process. Cargo starts integration tests in the crate
/// directory, so the relative file arguments resolve.
pub fn run_case(args: &[&str]) -> yamaguti_cli::Outcome {
    yamaguti_cli::run(argv(args))
}

pub fn golden_path(name: &str) -> PathBuf {
    golden_dir().join(format!("{name}.json"))
}

// ---- corpus construction ----

fn alg(l: LieYamagutiAlgebra) -> String {
    serialize_model(&Model::Algebra(l))
}

fn mor(phi: &MorphismLYA) -> String {
    serialize_model(&Model::Morphism(phi.clone()))
}

fn first_outside(z: &Subspace, b: &Subspace) -> Vec<Rational> {
    z.basis()
        .iter()
        .find(|v| !b.contains(v).unwrap())
        .cloned()
        .expect("a class outside the coboundaries")
}

/// Every corpus file as `(file name, contents)`.
pub fn corpus_files() -> Vec<(String, String)> {
    let mut out: Vec<(String, String)> = Vec::new();
    let mut put = |name: &str, text: String| out.push((format!("{name}.json"), text));

    for (name, l) in corpus::algebras() {
        put(name, alg(l));
    }
    for (name, phi) in corpus::morphisms() {
        put(name, mor(&phi));
    }
    let ab1 = LieYamagutiAlgebra::abelian(1);
    let ab2 = LieYamagutiAlgebra::abelian(2);
    let aff2 = corpus::affine2();
    let id_aff2 = MorphismLYA::identity(&aff2);
    put("id_dim1", mor(&MorphismLYA::identity(&ab1)));
    put("zero_abelian2", mor(&MorphismLYA::zero(&ab2, &ab2)));
    put(
        "not_morphism",
        mor(&MorphismLYA::new(aff2.clone(), aff2.clone(), Matrix::from_i64(&[&[1, 0], &[0, 2]])).unwrap()),
    );

    let mut nonskew = zero_vec(8);
    nonskew[2] = q(1); // [e1, e2] = e1 only
    put("nonskew", alg(LieYamagutiAlgebra::new(2, nonskew, zero_vec(16)).unwrap()));
    put(
        "noncanonical",
        r#"{"kind":"algebra","dim":2,"bracket":[{"args":[2,1],"value":{"1":"1"}}],"triple":[]}"#.to_string() + "\n",
    );
    put(
        "bad_rational",
        r#"{"kind":"algebra","dim":2,"bracket":[{"args":[1,2],"value":{"1":"1/0"}}],"triple":[]}"#.to_string() + "\n",
    );
    put("syntax_error", "{\n  \"kind\": \"algebra\",\n  \"dim\": 2,\n  \"bracket\": [\n}\n".to_string());

    put("adjoint_aff2", serialize_model(&Model::Representation(Representation::adjoint(&aff2))));
    put("trivial_aff2", serialize_model(&Model::Representation(Representation::trivial(&aff2))));
    let mut d = vec![Matrix::zeros(1, 1); 4];
    d[1] = Matrix::identity(1);
    let lone_d = Representation::new(aff2.clone(), 1, vec![Matrix::zeros(1, 1); 2], d, vec![Matrix::zeros(1, 1); 4]).unwrap();
    put("lone_d", serialize_model(&Model::Representation(lone_d)));

    let mr = self_morphism_representation(&id_aff2);
    put("self_aff2", serialize_model(&Model::MorphismRepresentation(mr.clone())));
    let bad_mr = yamaguti::MorphismRepresentation::new(
        id_aff2.clone(),
        Representation::adjoint(&aff2),
        Representation::adjoint(&aff2),
        Matrix::from_i64(&[&[1, 0], &[0, 2]]),
    )
    .unwrap();
    put("bad_mrep", serialize_model(&Model::MorphismRepresentation(bad_mr)));

    // Cochains over the identity of aff2.
    let s = MorphismShape::of(&mr);
    let h = morphism_cohomology_23(&mr).unwrap().full;
    let c1 = MorphismCochain23::from_vec(s, &h.cocycles.basis()[0]).unwrap();
    put(
        "cocycle_aff2",
        serialize_model(&Model::Cochain(CochainModel {
            base: Base::Morphism(id_aff2.clone()),
            cochain: c1.clone(),
        })),
    );
    let d1 = morphism_differential(&mr, 1);
    let k = (0..d1.cols()).find(|&k| !is_zero_vec(&d1.column(k))).unwrap();
    let mut e = zero_vec(s.degree_dim(1));
    e[k] = q(1);
    put(
        "noncocycle_aff2",
        serialize_model(&Model::Cochain(CochainModel {
            base: Base::Morphism(id_aff2.clone()),
            cochain: MorphismCochain23::from_vec(s, &e).unwrap(),
        })),
    );
    let heis = MorphismLYA::identity(&corpus::heisenberg());
    let mrh = self_morphism_representation(&heis);
    let sh = MorphismShape::of(&mrh);
    let untwistable = morphism_cohomology_23(&mrh)
        .unwrap()
        .full
        .cocycles
        .basis()
        .iter()
        .map(|v| MorphismCochain23::from_vec(sh, v).unwrap())
        .find(|c| !is_zero_vec(&twisting_defect(mrh.rep_v(), &c.alpha)))
        .expect("a cocycle violating the twisting identities");
    put(
        "untwistable_heisenberg",
        serialize_model(&Model::Cochain(CochainModel {
            base: Base::Morphism(heis),
            cochain: untwistable,
        })),
    );

    // Deformations.
    put("trivial_deformation_aff2", serialize_model(&Model::Deformation(FormalDeformation::trivial(&id_aff2, 3))));
    let id_sl2 = MorphismLYA::identity(&corpus::sl2());
    let e = EquivalenceData {
        psi_terms: vec![
            Matrix::from_i64(&[&[0, 1, 0], &[0, 0, 0], &[1, 0, 0]]),
            Matrix::from_i64(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, -1]]),
            Matrix::zeros(3, 3),
        ],
        psip_terms: vec![Matrix::identity(3), Matrix::zeros(3, 3), Matrix::from_i64(&[&[0, 0, 1], &[0, 0, 0], &[0, 0, 0]])],
    };
    let equiv = apply_equivalence(&FormalDeformation::trivial(&id_sl2, 3), &e).unwrap();
    put("equiv_sl2", serialize_model(&Model::Deformation(equiv)));
    let mut bad = FormalDeformation::trivial(&id_aff2, 1);
    bad.l1_terms[0].g.set(&[0, 1, 0], &[q(0), q(1)]).unwrap();
    put("bad_perturbation", serialize_model(&Model::Deformation(bad)));
    let zero_aff2 = MorphismLYA::zero(&aff2, &aff2);
    let mrz = self_morphism_representation(&zero_aff2);
    let hz = morphism_cohomology_23(&mrz).unwrap().full;
    let class = first_outside(&extension_cocycles(&mrz).unwrap(), &hz.coboundaries);
    let c = MorphismCochain23::from_vec(MorphismShape::of(&mrz), &class).unwrap();
    let mut nontrivial = FormalDeformation::trivial(&zero_aff2, 1);
    nontrivial.l1_terms[0] = c.alpha;
    nontrivial.l2_terms[0] = c.beta;
    nontrivial.phi_terms[0] = c.gamma.map;
    put("nontrivial_zero_aff2", serialize_model(&Model::Deformation(nontrivial)));

    // Extensions.
    let ext = extension_from_cocycle(&mr, &c1).unwrap();
    put("ext_aff2", serialize_model(&Model::Extension(ext.clone())));
    let mut ext_bad = ext.clone();
    ext_bad.p_bar.set(0, 2, q(1));
    put("ext_bad", serialize_model(&Model::Extension(ext_bad)));
    let can = canonical_section(&ext).unwrap();
    let shift = Matrix::from_i64(&[&[1, -1], &[2, 0]]);
    let shift_bar = Matrix::from_i64(&[&[0, 3], &[1, 1]]);
    put(
        "section_aff2",
        serialize_model(&Model::Section(Section {
            s: &can.s + &(&ext.i * &shift),
            s_bar: &can.s_bar + &(&ext.i_bar * &shift_bar),
        })),
    );

    // Isomorphisms: c2 = c1 - d(xi, xi').
    let xi = (Matrix::from_i64(&[&[1, 0], &[-1, 2]]), Matrix::from_i64(&[&[0, 1], &[1, 0]]));
    let dxi = morphism_d1(&mr, &xi.0, &xi.1).unwrap();
    let c2 = MorphismCochain23::from_vec(s, &vec_sub(&c1.to_vec(), &dxi.to_vec())).unwrap();
    put(
        "iso_aff2",
        serialize_model(&Model::Iso(IsoModel {
            base: Base::Morphism(id_aff2.clone()),
            first: c1.clone(),
            second: c2.clone(),
            xi: Some(xi),
        })),
    );
    put(
        "iso_aff2_solve",
        serialize_model(&Model::Iso(IsoModel {
            base: Base::Representation(mr.clone()),
            first: c1.clone(),
            second: c2,
            xi: None,
        })),
    );
    let class = first_outside(&h.cocycles, &h.coboundaries);
    put(
        "iso_noncohomologous",
        serialize_model(&Model::Iso(IsoModel {
            base: Base::Morphism(id_aff2),
            first: c1.clone(),
            second: MorphismCochain23::from_vec(s, &vec_add(&c1.to_vec(), &class)).unwrap(),
            xi: None,
        })),
    );
    out
}

pub fn read(path: &Path) -> String {
    std::fs::read_to_string(path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}
