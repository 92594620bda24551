//! Regenerates the classical Springer tables in `data/` from the symbol
//! algorithm: `cargo test -p weyl-strata-core --test generate_data -- --ignored`.

use weyl_strata_core::rootsys::{Family, SimpleType};
use weyl_strata_core::unipotent::{classical_classes, DataEntry, DataFile, Provenance};

#[test]
#[ignore]
fn regenerate_classical_tables() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    let types = [(Family::B, 2..=5), (Family::C, 2..=5), (Family::D, 4..=5)];
    for (family, ranks) in types {
        for rank in ranks {
            let ty = SimpleType::new(family, rank);
            let file = DataFile {
                provenance: Provenance {
                    source: "Lusztig symbols of the Jordan type".into(),
                    method: "[DERIVED] symbol algorithm, checked by the b-identity, injectivity, \
                             anchors and induction consistency"
                        .into(),
                    validation_suite: 1,
                },
                cartan_type: ty.to_string(),
                classes: classical_classes(ty)
                    .into_iter()
                    .map(|c| DataEntry { label: c.label, dim: c.dim, springer_label: c.springer.to_string() })
                    .collect(),
            };
            let text = serde_json::to_string_pretty(&file).unwrap() + "\n";
            std::fs::write(dir.join(format!("{ty}.json")), text).unwrap();
        }
    }
}
