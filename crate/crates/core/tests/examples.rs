//! Every example builds and runs to completion.

#[allow(dead_code)]
#[path = "../examples/table_weight.rs"]
mod table_weight;

#[allow(dead_code)]
#[path = "../examples/certify.rs"]
mod certify;

#[allow(dead_code)]
#[path = "../examples/f_theta.rs"]
mod f_theta;

#[allow(dead_code)]
#[path = "../examples/subdivision.rs"]
mod subdivision;

#[allow(dead_code)]
#[path = "../examples/kelmans.rs"]
mod kelmans;

#[allow(dead_code)]
#[path = "../examples/enumerate.rs"]
mod enumerate;

#[allow(dead_code)]
#[path = "../examples/extremal_bicyclic.rs"]
mod extremal_bicyclic;

#[allow(dead_code)]
#[path = "../examples/forbidden_subgraphs.rs"]
mod forbidden_subgraphs;

#[allow(dead_code)]
#[path = "../examples/conjecture.rs"]
mod conjecture;

#[allow(dead_code)]
#[path = "../examples/weight_properties.rs"]
mod weight_properties;

#[test]
fn example_table_weight() {
    table_weight::run_example().unwrap();
}

#[test]
fn example_certify() {
    certify::run_example().unwrap();
}

#[test]
fn example_f_theta() {
    f_theta::run_example().unwrap();
}

#[test]
fn example_subdivision() {
    subdivision::run_example().unwrap();
}

#[test]
fn example_kelmans() {
    kelmans::run_example().unwrap();
}

#[test]
fn example_enumerate() {
    enumerate::run_example().unwrap();
}

#[test]
fn example_extremal_bicyclic() {
    extremal_bicyclic::run_example().unwrap();
}

#[test]
fn example_forbidden_subgraphs() {
    forbidden_subgraphs::run_example().unwrap();
}

#[test]
fn example_conjecture() {
    conjecture::run_example().unwrap();
}

#[test]
fn example_weight_properties() {
    weight_properties::run_example().unwrap();
}
