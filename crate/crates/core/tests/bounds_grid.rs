use locating::bounds::{
    bound_table, class_capacity, counterexample_report, lemma_max, lemma_term, new_bound, old_bound,
};
use locating::extremal::build_extremal_tree;
use locating::Error;

/// `p * 2^(p-1) * 3^q` with plain integer powers.
fn term(p: u64, q: u64) -> u64 {
    p * 2u64.pow(p as u32 - 1) * 3u64.pow(q as u32)
}

#[test]
fn lemma_grid() {
    for k in 3..=16usize {
        let lemma = lemma_max(k).unwrap();
        assert_eq!(lemma.value, 4 * 3u64.pow(k as u32 - 3), "k={k}");
        assert_eq!(lemma.value, new_bound(k).unwrap());
        let expected: Vec<usize> = if k == 3 { vec![2] } else { vec![2, 3] };
        assert_eq!(lemma.argmax, expected, "k={k}");
        // independent maximum over every split 1 + p + q = k
        let brute = (1..k as u64).map(|p| term(p, k as u64 - 1 - p)).max().unwrap();
        assert_eq!(lemma.value, brute);
    }
    assert_eq!(lemma_max(5).unwrap().value, 36);
    assert_eq!(lemma_max(4).unwrap().value, 12);
    assert_eq!(lemma_max(3).unwrap().value, 4);
}

#[test]
fn old_bound_is_strictly_smaller_from_five() {
    for k in 3..=16 {
        let (old, new) = (old_bound(k).unwrap(), new_bound(k).unwrap());
        assert_eq!(old, (k as u64 - 1) * 2u64.pow(k as u32 - 2));
        if k <= 4 {
            assert_eq!(old, new, "k={k}");
        } else {
            assert!(old < new, "k={k}");
        }
    }
    assert_eq!(old_bound(5).unwrap(), 32);
    assert_eq!(new_bound(5).unwrap(), 36);
    assert_eq!(old_bound(3).unwrap(), 4);
    assert_eq!(new_bound(3).unwrap(), 4);
}

#[test]
fn ratio_recurrence() {
    for k in 5..=16usize {
        for p in 4..k {
            let q = k - 1 - p;
            assert!(
                term(p as u64 - 1, q as u64 + 1) > term(p as u64, q as u64),
                "k={k} p={p}"
            );
            assert_eq!(lemma_term(p, k).unwrap(), term(p as u64, q as u64));
        }
    }
}

#[test]
fn class_capacities() {
    assert_eq!(class_capacity(2, 5).unwrap(), 18);
    assert_eq!(class_capacity(1, 3).unwrap(), 3);
    for k in 3..=12 {
        for p in 1..k {
            let product = p as u64 * class_capacity(p, k).unwrap();
            assert_eq!(product, lemma_term(p, k).unwrap());
        }
    }
    assert!(matches!(class_capacity(0, 4), Err(Error::Input(_))));
    assert!(matches!(class_capacity(4, 4), Err(Error::Input(_))));
}

#[test]
fn table_rows() {
    let rows = bound_table(16).unwrap();
    assert_eq!(rows.len(), 14);
    let head: Vec<_> = rows.iter().take(3).map(|r| (r.k, r.old_bound, r.new_bound)).collect();
    assert_eq!(head, vec![(3, 4, 4), (4, 12, 12), (5, 32, 36)]);
    assert!(rows.iter().all(|r| r.lemma_value == r.new_bound));
}

#[test]
fn extremal_degree_matches_the_new_bound() {
    for k in 3..=8 {
        let t = build_extremal_tree(k).unwrap();
        assert_eq!(t.graph.max_degree().unwrap() as u64, new_bound(k).unwrap());
    }
}

#[test]
fn counterexample_reports() {
    let r5 = counterexample_report(5).unwrap();
    assert_eq!(r5.to_string(), "Δ=36 > 32, yet χ_L(T_5)=5");
    assert!(r5.contradicts_old_bound());
    let r6 = counterexample_report(6).unwrap();
    assert_eq!((r6.max_degree, r6.old_bound), (108, 80));
    assert!(r6.contradicts_old_bound());
    let r7 = counterexample_report(7).unwrap();
    assert_eq!((r7.max_degree, r7.old_bound), (324, 192));
    assert!(r7.contradicts_old_bound());
    assert!(matches!(counterexample_report(4), Err(Error::Input(_))));
}

#[test]
fn small_k_and_overflow() {
    assert!(matches!(lemma_max(2), Err(Error::Input(_))));
    assert!(matches!(old_bound(2), Err(Error::Input(_))));
    assert!(matches!(new_bound(64), Err(Error::Overflow(_))));
}
