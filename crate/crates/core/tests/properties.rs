use proptest::prelude::*;

use qskew::braided_ext::{module_algebra_state, mul};
use qskew::duality::{binomial, partitions_in_box, weyl_dim, Partition};
use qskew::embeddings::phi_q;
use qskew::qclifford::{apply_word, CliffordGen};
use qskew::qgroup::QGroupGen;
use qskew::qscalar::{exact_div, q_binomial, rational, specialize};
use qskew::{BasisState, GridShape, QLaurent, QVector};

fn laurent() -> impl Strategy<Value = QLaurent> {
    prop::collection::vec((-4i64..=4, -5i64..=5, 1i64..=3), 0..4)
        .prop_map(|terms| QLaurent::from_terms(terms.into_iter().map(|(k, n, d)| (k, rational(n, d)))))
}

fn nonzero_laurent() -> impl Strategy<Value = QLaurent> {
    laurent().prop_filter("nonzero", |p| !p.is_zero())
}

fn state(len: usize) -> impl Strategy<Value = BasisState> {
    (0u64..(1 << len)).prop_map(move |b| BasisState::from_bits(b, len).unwrap())
}

fn qvector(len: usize) -> impl Strategy<Value = QVector> {
    prop::collection::vec((state(len), laurent()), 0..5).prop_map(move |terms| {
        let mut v = QVector::zero(len);
        for (s, c) in terms {
            v.add_term(s, &c);
        }
        v
    })
}

proptest! {
    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &QLaurent::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in laurent(), b in nonzero_laurent()) {
        prop_assert_eq!(exact_div(&(&a * &b), &b).unwrap(), a);
    }

    #[test]
    fn specialization_is_a_ring_map(a in laurent(), b in laurent(), n in 2i64..6, d in 1i64..4) {
        let x = rational(n, d);
        let sa = specialize(&a, &x).unwrap();
        let sb = specialize(&b, &x).unwrap();
        prop_assert_eq!(specialize(&(&a * &b), &x).unwrap(), &sa * &sb);
        prop_assert_eq!(specialize(&(&a + &b), &x).unwrap(), sa + sb);
    }

    #[test]
    fn q_pascal(a in 1i64..9, b in 1i64..9) {
        prop_assume!(b < a);
        let lhs = q_binomial(a, b).unwrap();
        let rhs = &(&q_binomial(a - 1, b - 1).unwrap() * &QLaurent::q_pow(-(a - b)))
            + &(&q_binomial(a - 1, b).unwrap() * &QLaurent::q_pow(b));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn grid_bijection(n in 1usize..5, m in 1usize..5, k in 0usize..16) {
        let shape = GridShape::new(n, m).unwrap();
        prop_assume!(k < n * m);
        let (i, j) = shape.linear_to_grid(k + 1).unwrap();
        prop_assert_eq!(shape.grid_to_linear(i, j).unwrap(), k + 1);
    }

    #[test]
    fn weights_sum_to_degree(bits in 0u64..(1 << 12)) {
        let shape = GridShape::new(3, 4).unwrap();
        let s = BasisState::from_bits(bits, 12).unwrap();
        let (rows, cols) = shape.row_col_weights(&s).unwrap();
        prop_assert_eq!(rows.iter().sum::<usize>(), s.degree());
        prop_assert_eq!(cols.iter().sum::<usize>(), s.degree());
        prop_assert!(rows.iter().all(|&r| r <= 4) && cols.iter().all(|&c| c <= 3));
    }

    #[test]
    fn qvector_module_axioms(u in qvector(4), v in qvector(4), c in laurent(), d in laurent()) {
        prop_assert_eq!(u.add(&v), v.add(&u));
        prop_assert!(u.sub(&u).is_zero());
        prop_assert_eq!(u.add(&v).scale(&c), u.scale(&c).add(&v.scale(&c)));
        prop_assert_eq!(u.scale(&(&c + &d)), u.scale(&c).add(&u.scale(&d)));
    }

    #[test]
    fn braided_product_is_associative(a in state(6), b in state(6), c in state(6)) {
        let (a, b, c) = (QVector::basis(a), QVector::basis(b), QVector::basis(c));
        let left = mul(&mul(&a, &b).unwrap(), &c).unwrap();
        let right = mul(&a, &mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(&left, &right);
        let degree = left.iter().next().map(|(t, _)| t.degree());
        if let Some(d) = degree {
            let expected: usize = [&a, &b, &c].iter().flat_map(|v| v.iter().map(|(s, _)| s.degree())).sum();
            prop_assert_eq!(d, expected);
        }
    }

    #[test]
    fn anticommutation_on_states(s in state(8), i in 1usize..=8, j in 1usize..=8) {
        // psi_i psid_j + psid_j psi_i acts by delta_ij; psi_i psi_j = -psi_j psi_i.
        let act = |w: &[CliffordGen]| apply_word(w, s).map(|(neg, e, t)| (if neg { -1 } else { 1 }, e, t));
        let ab = act(&[CliffordGen::psi(i), CliffordGen::psid(j)]);
        let ba = act(&[CliffordGen::psid(j), CliffordGen::psi(i)]);
        match (ab, ba) {
            (Some((x, 0, t)), Some((y, 0, u))) => {
                prop_assert_eq!(t, u);
                prop_assert_eq!(i == j, x + y == 2 && t == s);
                prop_assert!(i == j || x + y == 0);
            }
            (Some((1, 0, t)), None) | (None, Some((1, 0, t))) => prop_assert!(i == j && t == s),
            (None, None) => prop_assert!(i != j),
            other => prop_assert!(false, "unexpected {:?}", other),
        }
        let pp = act(&[CliffordGen::psi(i), CliffordGen::psi(j)]);
        let qq = act(&[CliffordGen::psi(j), CliffordGen::psi(i)]);
        match (pp, qq) {
            (Some((x, _, t)), Some((y, _, u))) => prop_assert!(t == u && x == -y),
            (None, None) => {}
            other => prop_assert!(false, "unexpected {:?}", other),
        }
    }

    #[test]
    fn module_algebra_matches_phi(n in 1usize..=5, bits in 0u64..32, g in 0usize..64) {
        prop_assume!(bits < 1 << n);
        let gens = QGroupGen::generating_set(n);
        let g = gens[g % gens.len()];
        let s = BasisState::from_bits(bits, n).unwrap();
        prop_assert_eq!(module_algebra_state(g, s).unwrap(), phi_q(n, g).unwrap().apply_state(s));
    }

    #[test]
    fn conjugation_is_an_involution(parts in prop::collection::vec(0usize..6, 0..5)) {
        let mut parts = parts;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let mu = Partition::new(parts).unwrap();
        prop_assert_eq!(mu.conjugate().conjugate(), mu.clone());
        prop_assert_eq!(mu.conjugate().size(), mu.size());
        for n in 1..6 {
            for m in 1..6 {
                prop_assert_eq!(mu.fits_in_box(n, m), mu.len() <= n && mu.part(1) <= m);
            }
        }
    }
}

#[test]
fn box_counts_and_dimension_sums() {
    for n in 1..=4usize {
        for m in 1..=4usize {
            let parts = partitions_in_box(n, m);
            assert_eq!(parts.len() as u64, binomial((n + m) as u64, n as u64));
            let total: u64 = parts
                .iter()
                .map(|mu| weyl_dim(mu, n).unwrap() * weyl_dim(&mu.conjugate(), m).unwrap())
                .sum();
            assert_eq!(total, 1 << (n * m));
        }
    }
}
