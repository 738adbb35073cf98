#[path = "../examples/case_one.rs"]
mod case_one;
#[path = "../examples/case_two.rs"]
mod case_two;
#[path = "../examples/hopf_structure.rs"]
mod hopf_structure;
#[path = "../examples/ideal_membership.rs"]
mod ideal_membership;
#[path = "../examples/numeric_witness.rs"]
mod numeric_witness;
#[path = "../examples/one_block_kac.rs"]
mod one_block_kac;
#[path = "../examples/run_config.rs"]
mod run_config;
#[path = "../examples/trace_equations.rs"]
mod trace_equations;
#[path = "../examples/unitary_kac.rs"]
mod unitary_kac;

#[test]
fn case_one_runs() {
    case_one::run_example().unwrap();
}

#[test]
fn case_two_runs() {
    case_two::run_example().unwrap();
}

#[test]
fn hopf_structure_runs() {
    hopf_structure::run_example().unwrap();
}

#[test]
fn ideal_membership_runs() {
    ideal_membership::run_example().unwrap();
}

#[test]
fn numeric_witness_runs() {
    numeric_witness::run_example().unwrap();
}

#[test]
fn one_block_kac_runs() {
    one_block_kac::run_example().unwrap();
}

#[test]
fn presentations_runs() {
    presentations::run_example().unwrap();
}

#[test]
fn run_config_runs() {
    run_config::run_example().unwrap();
}

#[test]
fn trace_equations_runs() {
    trace_equations::run_example().unwrap();
}

#[test]
fn unitary_kac_runs() {
    unitary_kac::run_example().unwrap();
}
