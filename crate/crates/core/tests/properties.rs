use proptest::prelude::*;
use seqdesign_core::analysis::{array_crosscorrelation, berlekamp_massey, correlation_spectrum, linear_complexity_periodic};
use seqdesign_core::arrays::{array_shift, fold, unfold};
use seqdesign_core::field::gcd;
use seqdesign_core::BinarySequence;

fn coprime_dims() -> impl Strategy<Value = (usize, usize)> {
    (1usize..24, 1usize..24).prop_filter("coprime", |&(u, v)| gcd(u as u64, v as u64) == 1)
}

fn seq_of(len: usize) -> impl Strategy<Value = BinarySequence> {
    proptest::collection::vec(0u8..2, len).prop_map(|b| BinarySequence::new(b).unwrap())
}

fn folding() -> impl Strategy<Value = (usize, usize, BinarySequence, BinarySequence)> {
    coprime_dims().prop_flat_map(|(u, v)| (Just(u), Just(v), seq_of(u * v), seq_of(u * v)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn fold_round_trip((u, v, s, _) in folding()) {
        prop_assert_eq!(unfold(&fold(&s, u, v).unwrap()).unwrap(), s);
    }

    #[test]
    fn fold_commutes_with_shift((u, v, s, _) in folding(), tau in 0i64..1000) {
        let lhs = fold(&s.shift(tau), u, v).unwrap();
        let rhs = array_shift(&fold(&s, u, v).unwrap(), tau % v as i64, tau % u as i64);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bm_matches_oracle(bits in proptest::collection::vec(0u8..2, 1..=256)) {
        let s = BinarySequence::new(bits).unwrap();
        let r = linear_complexity_periodic(&s).unwrap();
        prop_assert_eq!(r.l, r.oracle_l);
        prop_assert!(berlekamp_massey(&s.repeat(2)).generates(&s.repeat(2)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn array_spectrum_equals_sequence_spectrum((u, v, a, b) in folding()) {
        let (fa, fb) = (fold(&a, u, v).unwrap(), fold(&b, u, v).unwrap());
        let spec = correlation_spectrum(&a, &b).unwrap();
        for (tau, &val) in spec.iter().enumerate() {
            let t = tau as i64;
            prop_assert_eq!(array_crosscorrelation(&fa, &fb, t % v as i64, t % u as i64).unwrap(), val);
        }
    }
}
