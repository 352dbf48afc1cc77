//! Fixtures shared by the criterion benches.

use yamaguti::cochain::{MorphismCochain23, MorphismShape};
use yamaguti::corpus;
use yamaguti::extension::extension_cocycles;
use yamaguti::representation::self_morphism_representation;
use yamaguti::MorphismRepresentation;

/// Each corpus morphism with its self representation.
pub fn morphism_representations() -> Vec<(String, MorphismRepresentation)> {
    corpus::morphisms()
        .into_iter()
        .map(|(name, phi)| (name.to_string(), self_morphism_representation(&phi)))
        .collect()
}

/// Sum of the basis of the extension cocycles, so every coordinate tends
/// to be exercised. `None` when that space is zero.
pub fn generic_cocycle(mr: &MorphismRepresentation) -> Option<MorphismCochain23> {
    let z = extension_cocycles(mr).ok()?;
    if z.dim() == 0 {
        return None;
    }
    let ones = vec![yamaguti::linalg::q(1); z.dim()];
    MorphismCochain23::from_vec(MorphismShape::of(mr), &z.combine(&ones)).ok()
}
