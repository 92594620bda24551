use super::*;
use crate::rootsys::SimpleType;
use crate::weylgrp::FactorGroup;
use crate::Caps;
use alloc::vec;

fn t(f: Family, r: usize) -> SimpleType {
    SimpleType::new(f, r)
}

/// Dominance-maximal valid partitions below `lambda`, by exhaustion.
fn brute_collapse(family: Family, lambda: &[u32]) -> Vec<Partition> {
    let below: Vec<Partition> = combinat::partitions(combinat::size(lambda))
        .into_iter()
        .filter(|m| is_valid(family, m) && combinat::dominated_by(m, lambda))
        .collect();
    below.iter().filter(|m| !below.iter().any(|o| o != *m && combinat::dominated_by(m, o))).cloned().collect()
}

#[test]
fn c2_classes() {
    let cl = classical_classes(t(Family::C, 2));
    let got: Vec<_> = cl.iter().map(|c| (c.label.as_str(), c.dim)).collect();
    assert_eq!(got, [("(4)", 8), ("(2,2)", 6), ("(2,1,1)", 4), ("(1,1,1,1)", 0)]);
}

#[test]
fn type_a_dims() {
    let cl = classical_classes(t(Family::A, 2));
    let got: Vec<_> = cl.iter().map(|c| c.dim).collect();
    assert_eq!(got, [6, 4, 0]);
    assert_eq!(classical_classes(t(Family::A, 1)).iter().map(|c| c.dim).collect::<Vec<_>>(), [2, 0]);
}

#[test]
fn every_supported_table_validates() {
    let data = SpringerData::embedded();
    for (f, ranks) in
        [(Family::A, 1..=5), (Family::B, 2..=5), (Family::C, 2..=5), (Family::D, 4..=5), (Family::G, 2..=2)]
    {
        for r in ranks {
            let g = FactorGroup::new(t(f, r), &Caps::default()).unwrap();
            let cl = classify(&g, &data).unwrap();
            if f != Family::G {
                // dual route: curated table agrees with the symbol algorithm
                assert_eq!(cl, classical_classes(t(f, r)));
            }
        }
    }
}

#[test]
fn corrupted_tables_are_rejected() {
    let data = SpringerData::embedded();
    let g = FactorGroup::new(t(Family::C, 2), &Caps::default()).unwrap();
    let mut file = data.get(t(Family::C, 2)).unwrap().clone();
    file.classes.swap(1, 2);
    let (a, b) = (file.classes[1].springer_label.clone(), file.classes[2].springer_label.clone());
    file.classes[1].springer_label = b;
    file.classes[2].springer_label = a;
    let text = serde_json::to_string(&file).unwrap();
    let mut bad = SpringerData::default();
    bad.insert("test", &text).unwrap();
    assert!(matches!(classify(&g, &bad), Err(Error::Integrity(_))));
    assert!(matches!(bad.insert("test", "{\"cartan_type\": \"C2\"}"), Err(Error::Data(_))));
}

#[test]
fn collapse_examples() {
    assert_eq!(collapse(Family::C, &[3, 1]).unwrap(), vec![2, 2]);
    assert_eq!(collapse(Family::C, &[2, 1, 1]).unwrap(), vec![2, 1, 1]);
    assert_eq!(collapse(Family::B, &[3, 1, 1]).unwrap(), vec![3, 1, 1]);
    assert!(collapse(Family::C, &[2, 1]).is_err());
}

#[test]
fn collapse_matches_brute_force() {
    for n in 1..=12u32 {
        for fam in [Family::B, Family::C, Family::D] {
            if (fam == Family::B) != (n % 2 == 1) {
                continue;
            }
            for l in combinat::partitions(n) {
                let c = collapse(fam, &l).unwrap();
                assert_eq!(brute_collapse(fam, &l), vec![c], "{fam:?} {l:?}");
            }
        }
    }
}

#[test]
fn induction_examples() {
    let a = InductionDatum { family: Family::A, target_size: 2, gl: vec![vec![1], vec![1]], core: vec![] };
    assert_eq!(ls_induce(&a).unwrap().partition, vec![2]);
    let siegel = InductionDatum { family: Family::C, target_size: 4, gl: vec![vec![1, 1]], core: vec![] };
    let r = ls_induce(&siegel).unwrap();
    assert_eq!(r.partition, vec![2, 2]);
    assert_eq!(orbit_dim(t(Family::C, 2), &r.partition), 6);
    let other = InductionDatum { family: Family::C, target_size: 4, gl: vec![vec![1]], core: vec![1, 1] };
    assert_eq!(ls_induce(&other).unwrap().partition, vec![2, 2]);
    let d4 = InductionDatum { family: Family::D, target_size: 8, gl: vec![vec![1, 1, 1, 1]], core: vec![] };
    assert_eq!(ls_induce(&d4).unwrap(), Induced { partition: vec![2, 2, 2, 2], ambiguous: true });
    let bad = InductionDatum { family: Family::C, target_size: 6, gl: vec![vec![1]], core: vec![1, 1] };
    assert!(ls_induce(&bad).is_err());
}

#[test]
fn dominance() {
    assert!(dominance_leq(&[2, 1, 1], &[2, 2]).unwrap());
    assert!(dominance_leq(&[2, 2], &[2, 2]).unwrap());
    assert!(!dominance_leq(&[3, 1], &[2, 2]).unwrap());
    assert!(dominance_leq(&[3], &[2, 2]).is_err());
}

#[test]
fn label_round_trip() {
    for s in ["[2,1].[1]", "[].[1,1]"] {
        assert_eq!(data::parse_irr_label(Family::B, s).unwrap().to_string(), s);
    }
    assert_eq!(data::parse_irr_label(Family::D, "[2].[2]+").unwrap().to_string(), "[2].[2]+");
    assert!(data::parse_irr_label(Family::D, "[1].[2]").is_err());
    assert!(data::parse_irr_label(Family::C, "[1].[1]+").is_err());
}
