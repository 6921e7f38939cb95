//! DIMACS parsing and brute-force satisfiability.

use ocdom::sat::{brute_force_sat, parse_dimacs_cnf, saturated_3cnf, EXAMPLE_5VAR};

fn main() {
    let f = parse_dimacs_cnf(EXAMPLE_5VAR).unwrap();
    print!("{}", f.to_dimacs());
    match brute_force_sat(&f, 24).unwrap() {
        Some(model) => println!("satisfiable: {model}"),
        None => println!("unsatisfiable"),
    }

    let all_signs = saturated_3cnf(3, [1, 2, 3]).unwrap();
    println!(
        "all eight sign patterns over u1,u2,u3: {:?}",
        brute_force_sat(&all_signs, 24).unwrap()
    );
}
