use proptest::prelude::*;
use seqdesign::core::arrays::{BinaryArray, ShiftSequence};
use seqdesign::core::BinarySequence;
use seqdesign::formats::{read_array, read_family, read_shift_patterns, write_array_text, write_pbm, write_sequences};

fn members() -> impl Strategy<Value = Vec<BinarySequence>> {
    (1usize..80, 1usize..6).prop_flat_map(|(len, n)| {
        proptest::collection::vec(
            proptest::collection::vec(0u8..2, len).prop_map(|b| BinarySequence::new(b).unwrap()),
            n,
        )
    })
}

proptest! {
    #[test]
    fn sequence_file_roundtrip(m in members(), stamp in any::<bool>()) {
        let f = read_family(&write_sequences(&m, stamp)).unwrap();
        prop_assert_eq!(f.label, None);
        prop_assert_eq!(f.members, m);
    }

    #[test]
    fn array_roundtrip(rows in 1usize..20, cols in 1usize..20, seed in any::<u64>()) {
        let a = BinaryArray::from_fn(rows, cols, |i, j| ((seed >> ((i * 7 + j) % 64)) & 1) as u8);
        prop_assert_eq!(read_array(&write_array_text(&a)).unwrap(), a.clone());
        prop_assert_eq!(read_array(&write_pbm(&a)).unwrap(), a);
    }

    #[test]
    fn shift_pattern_roundtrip(
        vals in proptest::collection::vec(proptest::option::of(0u32..11), 1..30),
    ) {
        let s = ShiftSequence::new(vals, 11).unwrap();
        let (kind, back) = read_shift_patterns(&s.to_csv(), Some(11)).unwrap();
        prop_assert_eq!(kind, None);
        prop_assert_eq!(back, vec![s]);
    }
}

#[test]
fn malformed_inputs_are_rejected() {
    assert!(read_family("").is_err());
    assert!(read_family("0102\n").is_err());
    assert!(read_family("{\"kind\":\"gold\"").is_err());
    assert!(read_array("P1\n3 2\n1 0 1\n").is_err());
    assert!(read_array("101\n10\n").is_err());
}
