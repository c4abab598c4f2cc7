use seqdesign_core::analysis::{conjecture_check, family_correlation_report, linear_complexity_periodic};
use seqdesign_core::arrays::{substitute_columns, unfold};
use seqdesign_core::seqgen::legendre;
use seqdesign_core::shiftseq::{family_a_shifts, family_b_shifts, family_c_shifts, family_hop_max, mt_sequence_family};

#[test]
fn family_a_and_b_coincidence_bound() {
    for p in [5u64, 7, 11, 13] {
        let f = family_a_shifts(p).unwrap();
        assert_eq!(f.patterns.len() as u64, p);
        assert!(family_hop_max(&f).unwrap().0.max <= 2, "A p={p}");
    }
    for p in [3u64, 5, 7, 11, 13] {
        let f = family_b_shifts(p).unwrap();
        assert_eq!(f.patterns.len() as u64, p - 1);
        assert!(family_hop_max(&f).unwrap().0.max <= 2, "B p={p}");
    }
}

#[test]
fn family_c_base_bound() {
    for n in [2, 4] {
        let f = family_c_shifts(n).unwrap();
        let base = &f.patterns[0];
        let h = seqdesign_core::shiftseq::hop_hamming_max(base, base, true).unwrap();
        assert!(h.max <= 2, "n={n}");
    }
}

#[test]
fn family_c_polynomial() {
    let col = legendre(17).unwrap();
    let fam = mt_sequence_family(&family_c_shifts(4).unwrap(), &col, 0).unwrap();
    assert_eq!(fam.length(), 255);
    let r = linear_complexity_periodic(&fam.members[0]).unwrap();
    assert_eq!(r.l, 120);
    assert_eq!(r.feedback.exponents(), vec![0, 15, 30, 60, 90, 105, 120]);
    let c = conjecture_check(&fam.members[3], &col, 15).unwrap();
    assert!(c.holds);
}

#[test]
fn family_a_long_complexity() {
    // the long sequence keeps a single (1 + x) factor instead of (1 + x^n)
    for (p, l) in [(7u64, 19usize), (11, 101)] {
        let col = legendre(p).unwrap();
        let fam = mt_sequence_family(&family_a_shifts(p).unwrap(), &col, 0).unwrap();
        assert_eq!(linear_complexity_periodic(&fam.members[0]).unwrap().l, l);
        let c = conjecture_check(&fam.members[0], &col, (p - 1) as usize).unwrap();
        assert!(!c.holds);
    }
}

#[test]
fn mt_correlation_scale() {
    for p in [7u64, 11] {
        let col = legendre(p).unwrap();
        for (shifts, fill) in [(family_a_shifts(p).unwrap(), 0), (family_b_shifts(p).unwrap(), 0)] {
            let fam = mt_sequence_family(&shifts, &col, fill).unwrap();
            assert!(family_correlation_report(&fam).max_abs() <= 2 * p as i64 + 3);
        }
    }
}

#[test]
fn vertical_offset_is_a_cyclic_shift() {
    let col = legendre(11).unwrap();
    let pat = &family_a_shifts(11).unwrap().patterns[2];
    let s = unfold(&substitute_columns(pat, &col, 0).unwrap()).unwrap();
    for d in 1..11 {
        let t = unfold(&substitute_columns(&pat.offset(d), &col, 0).unwrap()).unwrap();
        assert!(s.shift_to(&t).is_some());
    }
}
