use proptest::prelude::*;

use pfaffian::characters::{CharKind, CharSpec};
use pfaffian::ext::{ext_series_closed, ext_series_enum, zset_rectangle, zset_thickened};
use pfaffian::gaussian::{gaussian_binomial, gaussian_binomial_oracle};
use pfaffian::kgroup::{Basis, KClass};
use pfaffian::lyubeznik::{l_closed, l_composed, ring_dim};
use pfaffian::partitions::{binomial, enumerate_box, Partition};
use pfaffian::weights::{
    bott, enumerate_b_set, in_b_set, verify_pushforward, BottResult, DominantWeight,
};
use pfaffian::{Exec, Poly};

fn bipoly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((-6i64..=6, -6i64..=6, -20i64..=20), 0..6)
        .prop_map(|terms| Poly::from_terms(terms).unwrap())
}

fn qpoly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((-6i64..=10, -20i64..=20), 0..6)
        .prop_map(|terms| Poly::from_terms(terms.into_iter().map(|(e, c)| (e, 0, c))).unwrap())
}

fn partition(rows: usize, cols: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=cols, rows).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn dominant(len: usize, bound: i64) -> impl Strategy<Value = DominantWeight> {
    prop::collection::vec(-bound..=bound, len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        DominantWeight::new(v).unwrap()
    })
}

proptest! {
    #[test]
    fn ring_axioms(a in bipoly(), b in bipoly(), c in bipoly()) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        let left = a.mul(&b.add(&c).unwrap()).unwrap();
        let right = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(a.mul(&Poly::one()).unwrap(), a.clone());
    }

    #[test]
    fn negation_cancels(a in bipoly()) {
        let z = a.add(&a.neg().unwrap()).unwrap();
        prop_assert!(z.is_empty());
        prop_assert_eq!(a.sub(&a).unwrap(), Poly::zero());
    }

    #[test]
    fn reverse_is_involutive_and_multiplicative(p in qpoly(), r in qpoly(), d1 in -10i64..=20, d2 in -10i64..=20) {
        prop_assert_eq!(p.reverse(d1).unwrap().reverse(d1).unwrap(), p.clone());
        let lhs = p.mul(&r).unwrap().reverse(d1 + d2).unwrap();
        let rhs = p.reverse(d1).unwrap().mul(&r.reverse(d2).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitution_is_a_ring_map(p in qpoly(), r in qpoly(), k in 1i64..=5) {
        let lhs = p.mul(&r).unwrap().substitute_power(k).unwrap();
        let rhs = p.substitute_power(k).unwrap().mul(&r.substitute_power(k).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gaussian_oracle_and_symmetry(a in 0i64..=14, frac in 0.0f64..=1.0) {
        let b = (a as f64 * frac).round() as i64;
        let g = gaussian_binomial(a, b).unwrap();
        prop_assert_eq!(&g, &gaussian_binomial_oracle(a, b).unwrap());
        prop_assert_eq!(&g, &gaussian_binomial(a, a - b).unwrap());
        prop_assert_eq!(&g, &g.reverse(b * (a - b)).unwrap());
        let total: i64 = g.terms().map(|(_, _, c)| c).sum();
        prop_assert_eq!(Some(total as u64), binomial(a as u64, b as u64));
    }

    #[test]
    fn box_enumeration(rows in 0usize..=6, cols in 0u32..=6) {
        let all: Vec<_> = enumerate_box(rows, cols).collect();
        prop_assert_eq!(Some(all.len() as u64), binomial(rows as u64 + cols as u64, cols as u64));
        for w in all.windows(2) {
            prop_assert!(w[0] > w[1]);
        }
        for x in &all {
            prop_assert_eq!(x.len(), rows);
            prop_assert!(x.first() <= cols);
        }
    }

    #[test]
    fn conjugate_is_involutive(x in partition(6, 6)) {
        let profile: Vec<u32> = x.parts().iter().copied().filter(|&v| v > 0).collect();
        let back: Vec<u32> = x.conjugate().conjugate().parts().to_vec();
        prop_assert_eq!(back, profile);
        prop_assert_eq!(x.conjugate().size(), x.size());
    }

    #[test]
    fn bott_output_is_dominant(gamma in prop::collection::vec(-6i64..=6, 1..=7)) {
        let n = gamma.len();
        match bott(&gamma) {
            BottResult::Zero => {}
            BottResult::Cohomology { degree, weight } => {
                prop_assert!(degree <= n * (n - 1) / 2);
                prop_assert_eq!(weight.len(), n);
                let sum: i64 = gamma.iter().sum();
                prop_assert_eq!(weight.entries().iter().sum::<i64>(), sum);
            }
        }
    }

    #[test]
    fn bott_fixes_dominant_weights(w in dominant(6, 8)) {
        match bott(w.entries()) {
            BottResult::Cohomology { degree, weight } => {
                prop_assert_eq!(degree, 0);
                prop_assert_eq!(weight, w);
            }
            BottResult::Zero => prop_assert!(false, "dominant weight killed"),
        }
    }

    #[test]
    fn b_set_enumeration_matches_membership(n in 1i64..=5, s_frac in 0.0f64..=1.0, bound in 0i64..=3) {
        let m = n / 2;
        let s = (m as f64 * s_frac).round() as i64;
        let listed = enumerate_b_set(s, n, bound).unwrap();
        for w in &listed {
            prop_assert!(in_b_set(s as usize, n as usize, w));
            prop_assert!(w.max_abs() <= bound);
        }
        for w in listed.windows(2) {
            prop_assert!(w[0] != w[1]);
        }
    }

    #[test]
    fn ideal_membership_is_upward_closed(z in partition(3, 3), x in partition(3, 4), bump in partition(3, 2)) {
        let spec = CharSpec::new(CharKind::IdealI(z), 6).unwrap();
        let y: Vec<u32> = x.parts().iter().zip(bump.parts()).map(|(a, b)| a + b).collect();
        let y = Partition::new(y).unwrap();
        if spec.contains(&x.double_columns().to_weight()) {
            prop_assert!(spec.contains(&y.double_columns().to_weight()));
        }
    }

    #[test]
    fn pole_sets_increase(half in dominant(3, 8)) {
        let mu = half.double_columns();
        let poles: Vec<_> = (0..3).map(|k| CharSpec::new(CharKind::PfPole { k }, 6).unwrap()).collect();
        for k in 1..3 {
            prop_assert!(!poles[k - 1].contains(&mu) || poles[k].contains(&mu));
        }
    }

    #[test]
    fn basis_change_roundtrip(m in 1usize..=5, coeffs in prop::collection::vec(qpoly(), 6)) {
        let class = KClass::new(Basis::Q, 2 * m, coeffs[..=m].to_vec()).unwrap();
        prop_assert_eq!(class.q_to_d().unwrap().d_to_q().unwrap(), class.clone());
        prop_assert_eq!(class.reverse(7).unwrap().reverse(7).unwrap(), class);
    }

    #[test]
    fn ext_routes_agree(m in 1usize..=8, a_frac in 0.0f64..=1.0, extra in 0i64..=5) {
        let a = 1 + ((m - 1) as f64 * a_frac).round() as usize;
        let b = 2 * a as i64 - 1 + extra;
        prop_assert_eq!(ext_series_enum(m, a, b).unwrap(), ext_series_closed(m, a, b).unwrap());
    }

    #[test]
    fn zsets_disjoint_and_nested(m in 2usize..=5, k_frac in 0.0f64..=1.0, e in 0u32..=4) {
        let k = 1 + ((m - 2) as f64 * k_frac).round() as usize;
        let rect = zset_rectangle(m, m - k, e).unwrap();
        let thick_next = zset_thickened(m, m - k + 1, e).unwrap();
        prop_assert!(rect.is_disjoint(&thick_next));
        let wider = zset_rectangle(m, m - k, e + 1).unwrap();
        for pair in zset_thickened(m, m - k, e).unwrap() {
            prop_assert!(pair.p() == m - 1 || wider.contains(&pair));
        }
    }

    #[test]
    fn lyubeznik_paths_agree(n in 2usize..=16, k_frac in 0.0f64..1.0) {
        let k = ((n / 2) as f64 * k_frac).floor() as usize;
        let closed = l_closed(n, k).unwrap();
        prop_assert_eq!(&closed, &l_composed(n, k).unwrap());
        prop_assert!(closed.has_nonnegative_coeffs());
        let dim = ring_dim(n, k);
        prop_assert_eq!(closed.coeff(dim, dim), 1);
        for (i, j, _) in closed.terms() {
            prop_assert!(0 <= i && i <= j && j <= dim);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn parallel_matches_sequential(m in 0usize..=3, p_frac in 0.0f64..=1.0, extra in 0i64..=3) {
        let p = (m as f64 * p_frac).round() as usize;
        let bound = 2 * m as i64 + 1 + extra;
        let seq = verify_pushforward(m, p, bound, Exec::Sequential).unwrap();
        let par = verify_pushforward(m, p, bound, Exec::Parallel).unwrap();
        prop_assert!(seq.pass);
        prop_assert_eq!(seq, par);
    }
}
