use griess_forge::lattice::niemeier::{a2_blocks, codeword_isometry};
use griess_forge::lattice::{enumerate, intmat, IntegralLattice};
use proptest::prelude::*;

/// Random positive-definite Gram `B B^T + I` of rank 1..=4.
fn gram_strategy() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=4).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(-2i64..=2, n), n).prop_map(move |b| {
            (0..n)
                .map(|i| (0..n).map(|j| b[i].iter().zip(&b[j]).map(|(x, y)| x * y).sum::<i64>() + (i == j) as i64).collect())
                .collect()
        })
    })
}

fn brute(gram: &[Vec<i64>], norm: i64, box_r: i64) -> Vec<Vec<i64>> {
    let n = gram.len();
    let mut out = Vec::new();
    let side = 2 * box_r + 1;
    for mut k in 0..side.pow(n as u32) {
        let x: Vec<i64> = (0..n)
            .map(|_| {
                let d = k % side - box_r;
                k /= side;
                d
            })
            .collect();
        if enumerate::norm_of(gram, &x) == norm {
            out.push(x);
        }
    }
    out.sort();
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn short_vectors_match_brute_force(gram in gram_strategy(), norm in 1i64..=6) {
        // coordinates of a vector of norm <= 6 are bounded by sqrt(6 * max diag of inverse);
        // the form dominates the identity, so |x_i| <= sqrt(6) < 3
        let mut got = enumerate::short_vectors(&gram, norm);
        got.sort();
        prop_assert_eq!(got, brute(&gram, norm, 3));
    }

    #[test]
    fn lll_preserves_lattice(gram in gram_strategy()) {
        let (u, g2) = intmat::lll_gram(&gram);
        prop_assert_eq!(intmat::gram_of(&u, &gram), g2.clone());
        let l = IntegralLattice::new("x", gram.clone()).unwrap();
        let l2 = IntegralLattice::new("y", g2).unwrap();
        prop_assert_eq!(l.det(), l2.det());
        prop_assert_eq!(intmat::hnf(&u).len(), gram.len());
        prop_assert_eq!(intmat::smith_invariants(&u).iter().product::<num_bigint::BigInt>(), num_bigint::BigInt::from(1));
    }

    #[test]
    fn hnf_is_idempotent(rows in prop::collection::vec(prop::collection::vec(-9i64..=9, 3), 1..6)) {
        let h = intmat::hnf(&rows);
        prop_assert_eq!(intmat::hnf(&h), h.clone());
        for r in &rows {
            let mut ext = h.clone();
            ext.push(r.clone());
            prop_assert_eq!(intmat::hnf(&ext), h.clone());
        }
    }

    #[test]
    fn codeword_isometry_preserves_form(word in prop::collection::vec(-1i8..=1, 4), v in prop::collection::vec(-6i64..=6, 8), w in prop::collection::vec(-6i64..=6, 8)) {
        let f = a2_blocks(4);
        let hv = codeword_isometry(&word, &v);
        let hw = codeword_isometry(&word, &w);
        prop_assert_eq!(enumerate::inner(&f, &hv, &hw), enumerate::inner(&f, &v, &w));
        let mut x = v.clone();
        for _ in 0..3 {
            x = codeword_isometry(&word, &x);
        }
        prop_assert_eq!(x, v);
    }
}
