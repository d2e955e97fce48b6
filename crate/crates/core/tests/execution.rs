use youngfib::fibokostka::{n_matrix_with, okada_matrix_with, Method};
use youngfib::verify::run_suite;
use youngfib::yfposet::{weak_order_yft_with, POSET_BOUND};
use youngfib::youngside::{chain_order_syt_with, kostka_matrix_by_interval, Order, SYT_BOUND};
use youngfib::Exec;

#[test]
fn sequential_and_parallel_agree() {
    let modes = [Exec::Sequential, Exec::Parallel];
    let [a, b] = modes.map(|e| n_matrix_with(6, e));
    assert_eq!(a, b);
    let [a, b] = modes.map(|e| okada_matrix_with(6, Method::Interval, POSET_BOUND, e).unwrap());
    assert_eq!(a, b);
    let [a, b] = modes.map(|e| weak_order_yft_with(6, POSET_BOUND, e).unwrap());
    assert_eq!(a.elements(), b.elements());
    assert_eq!(a.poset(), b.poset());
    let [a, b] = modes.map(|e| chain_order_syt_with(5, SYT_BOUND, e).unwrap());
    assert_eq!(a.poset(), b.poset());
    let [a, b] = modes.map(|e| kostka_matrix_by_interval(5, Order::Chain, SYT_BOUND, e).unwrap());
    assert_eq!(a, b);
}

#[test]
fn every_suite_holds_at_its_bound() {
    let checks = run_suite("all", 7, Exec::default()).unwrap();
    let failed: Vec<String> = checks.iter().filter(|c| !c.passed()).map(ToString::to_string).collect();
    assert!(failed.is_empty(), "{failed:?}");
    assert!(checks.iter().all(|c| c.size <= 7));
}

#[test]
fn oversize_requests_are_refused() {
    assert!(weak_order_yft_with(9, POSET_BOUND, Exec::Sequential).is_err());
    assert!(okada_matrix_with(9, Method::Interval, POSET_BOUND, Exec::Sequential).is_err());
    assert!(chain_order_syt_with(8, SYT_BOUND, Exec::Sequential).is_err());
}
