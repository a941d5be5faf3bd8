mod common;

#[test]
fn jacobian_matches_finite_differences_on_random_states() {
    let (err, at) = common::jacobian::worst_jacobian_error(20, 11);
    assert!(err < 1e-5, "{err:e} at {at}");
}
