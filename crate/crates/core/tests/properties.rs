use proptest::prelude::*;

use leecode_core::closed_form::{distribution_formula, lee_weight_formula};
use leecode_core::code::{brute_force_distribution, encode, DefiningSet, Instance};
use leecode_core::ring::{inner_product_mixed, parity_dot};
use leecode_core::{BinaryWord, BitVec, CodewordZ2u, MixedWord, Z2uElement};

fn codeword(len: usize) -> impl Strategy<Value = CodewordZ2u> {
    (
        prop::collection::vec(any::<bool>(), len),
        prop::collection::vec(any::<bool>(), len),
    )
        .prop_map(|(q, r)| {
            CodewordZ2u::from_parts(BinaryWord::from_bits(&q), BinaryWord::from_bits(&r)).unwrap()
        })
}

fn codeword_pair() -> impl Strategy<Value = (CodewordZ2u, CodewordZ2u)> {
    (0usize..200).prop_flat_map(|n| (codeword(n), codeword(n)))
}

fn element() -> impl Strategy<Value = Z2uElement> {
    (any::<bool>(), any::<bool>()).prop_map(|(y, z)| Z2uElement::new(y, z))
}

fn instance(m: u32) -> impl Strategy<Value = Instance> {
    let full = (1u64 << m) - 1;
    (0..full, 0..full, 0..full).prop_map(move |(d, e, f)| Instance::from_masks(m, d, e, f).unwrap())
}

proptest! {
    #[test]
    fn gray_map_is_an_isometry((a, b) in codeword_pair()) {
        let diff = a.add(&b).unwrap();
        prop_assert_eq!(diff.lee_weight(), a.gray_image().distance(&b.gray_image()).unwrap());
    }

    #[test]
    fn gray_map_is_additive((a, b) in codeword_pair()) {
        let lhs = a.add(&b).unwrap().gray_image();
        let rhs = a.gray_image().xor(&b.gray_image()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn lee_weight_bounds(w in (0usize..300).prop_flat_map(codeword)) {
        prop_assert!(w.lee_weight() <= 2 * w.len() as u64);
        prop_assert_eq!(w.lee_weight(), w.gray_image().weight());
    }

    #[test]
    fn parity_dot_symmetric_bilinear(m in 2u32..=20, x in any::<u64>(), y in any::<u64>(), z in any::<u64>()) {
        let mask = (1u64 << m) - 1;
        let (x, y, z) = (BitVec::new(x & mask, m).unwrap(), BitVec::new(y & mask, m).unwrap(), BitVec::new(z & mask, m).unwrap());
        prop_assert_eq!(parity_dot(x, y).unwrap(), parity_dot(y, x).unwrap());
        prop_assert_eq!(
            parity_dot(x.add(y).unwrap(), z).unwrap(),
            parity_dot(x, z).unwrap() ^ parity_dot(y, z).unwrap()
        );
    }

    #[test]
    fn inner_product_scalar_law(m in 2u32..=8, idx in any::<u64>(), t in any::<[u64; 3]>(), alpha in element()) {
        let a = MixedWord::from_index(idx & ((1 << (3 * m)) - 1), m).unwrap();
        let mask = (1u64 << m) - 1;
        let [t1, t2, t3] = t.map(|v| BitVec::new(v & mask, m).unwrap());
        prop_assert_eq!(
            inner_product_mixed(&a.scale(alpha), t1, t2, t3).unwrap(),
            alpha * inner_product_mixed(&a, t1, t2, t3).unwrap()
        );
    }

    #[test]
    fn encode_is_a_module_morphism(inst in instance(3), x in 0u64..512, y in 0u64..512, alpha in element()) {
        let set = DefiningSet::new(&inst);
        let a = MixedWord::from_index(x, 3).unwrap();
        let b = MixedWord::from_index(y, 3).unwrap();
        let ea = encode(&a, &set).unwrap();
        prop_assert_eq!(encode(&a.add(&b).unwrap(), &set).unwrap(), ea.add(&encode(&b, &set).unwrap()).unwrap());
        prop_assert_eq!(encode(&a.scale(alpha), &set).unwrap(), ea.scale(alpha));
    }

    #[test]
    fn formula_weight_matches_encoding_m4(inst in instance(4), idx in 0u64..4096) {
        let a = MixedWord::from_index(idx, 4).unwrap();
        let direct = encode(&a, &DefiningSet::new(&inst)).unwrap().lee_weight();
        prop_assert_eq!(lee_weight_formula(&inst, &a).unwrap(), direct);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn few_weight_and_residual(inst in instance(4)) {
        let (msg, cw) = distribution_formula(&inst).unwrap();
        prop_assert_eq!(msg.total(), 4096);
        prop_assert!(cw.nonzero_weights().count() <= 12);
        prop_assert!(msg.max_weight().unwrap() <= inst.gray_length());
        let (bmsg, bcw) = brute_force_distribution(&inst).unwrap();
        prop_assert_eq!(bmsg, msg);
        prop_assert_eq!(bcw, cw);
    }
}
