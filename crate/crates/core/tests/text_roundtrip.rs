mod support;

use proptest::prelude::*;
use superring_core::parse_expr;
use support::{named_ring, Q};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn print_then_parse(seed: u64) {
        prop_assert_eq!(support::roundtrip_case(seed), Ok(()));
    }

    #[test]
    fn print_is_stable(seed: u64) {
        let ring = named_ring(Q, 2, 2);
        let mut r = support::rng(seed);
        let f = support::superpoly(&mut r, Q, 2, 2, 3, 4, None);
        let once = ring.format(&f);
        let twice = ring.format(&parse_expr(&once, &ring).unwrap());
        prop_assert_eq!(once, twice);
    }
}

#[test]
fn equivalent_spellings_agree() {
    let ring = named_ring(Q, 2, 2);
    let a = parse_expr("(x + t1)*(x - t1)", &ring).unwrap();
    let b = parse_expr("x^2", &ring).unwrap();
    assert_eq!(a, b);
    let c = parse_expr("t2 t1 + 2 x y/1", &ring).unwrap();
    assert_eq!(ring.format(&c), "2*x*y - t1*t2");
}
