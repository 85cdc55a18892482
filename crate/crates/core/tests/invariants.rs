use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use z4uk::codes::{CodeElement, CyclicCode, FactorSystem};
use z4uk::duality::dual_code;
use z4uk::graymap::{lee_weight, upsilon, QcCode};

fn random_code(n: usize, k: usize, seed: u64) -> CyclicCode {
    let system = FactorSystem::new(n).unwrap();
    system.random_code(k, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dual_is_involutive_and_sizes_multiply(n in prop::sample::select(vec![1usize, 3, 5, 7, 9]), k in 2usize..6, seed: u64) {
        let c = random_code(n, k, seed);
        let d = dual_code(&c).unwrap();
        prop_assert_eq!(c.log2_cardinality() + d.log2_cardinality(), (2 * k * n) as u64);
        prop_assert_eq!(dual_code(&d).unwrap(), c);
    }

    #[test]
    fn codes_are_ideals(n in prop::sample::select(vec![1usize, 3, 5, 7]), k in 2usize..5, seed: u64) {
        let c = random_code(n, k, seed);
        for row in c.spanning_rows().unwrap() {
            prop_assert!(c.contains(&row.mul_x()).unwrap());
            prop_assert!(c.contains(&row.mul_u()).unwrap());
        }
    }

    #[test]
    fn upsilon_is_additive(a in prop::collection::vec(0u8..4, 28), b in prop::collection::vec(0u8..4, 28)) {
        let ea = CodeElement::from_entries(7, 4, &a).unwrap();
        let eb = CodeElement::from_entries(7, 4, &b).unwrap();
        let sum = upsilon(&ea.checked_add(&eb).unwrap()).unwrap();
        let parts: Vec<u8> = upsilon(&ea).unwrap().iter().zip(upsilon(&eb).unwrap()).map(|(x, y)| (x + y) & 3).collect();
        prop_assert_eq!(sum, parts);
    }

    #[test]
    fn gray_image_preserves_size(n in prop::sample::select(vec![1usize, 3, 7]), seed: u64) {
        let c = random_code(n, 4, seed);
        let qc = QcCode::from_code(&c).unwrap();
        prop_assert_eq!(qc.log2_size(), c.log2_cardinality());
    }

    #[test]
    fn lee_weight_is_a_norm(a in prop::collection::vec(0u8..4, 12), b in prop::collection::vec(0u8..4, 12)) {
        let sum: Vec<u8> = a.iter().zip(&b).map(|(x, y)| (x + y) & 3).collect();
        let neg: Vec<u8> = a.iter().map(|x| (4 - x) & 3).collect();
        prop_assert!(lee_weight(&sum) <= lee_weight(&a) + lee_weight(&b));
        prop_assert_eq!(lee_weight(&neg), lee_weight(&a));
    }
}
