//! K_n survives any ceil((n+1)/2) - 1 edge removals connected, but not one more
//! removal in general.

use ocdom::closed_forms::{check_complete_minus_edges_connected, lemma_budget};

fn main() {
    for n in 3..=8 {
        let b = lemma_budget(n);
        let at = check_complete_minus_edges_connected(n, Some(b)).unwrap();
        let above = check_complete_minus_edges_connected(n, Some(n - 1)).unwrap();
        println!(
            "K_{n}: budget {b} -> connected={at};  {} removals -> connected={above}",
            n - 1
        );
    }
}
