//! Write a graph as an edge list, read it back, and show the parser's errors.

use ocdom::edgelist::{edge_list_string, parse_edge_list};
use ocdom::graph::{generate_galaxy, Graph};

fn main() {
    let g = generate_galaxy(&[3, 2]).unwrap();
    let text = edge_list_string(&g);
    print!("{text}");
    let back = parse_edge_list(&text).unwrap();
    assert_eq!(back, g);

    let h = Graph::from_pairs(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
    println!(
        "components of P_4 minus {{1,2}}: {:?}",
        h.remove_edges(&[ocdom::Edge::of(1, 2)])
            .unwrap()
            .components()
            .iter()
            .map(|c| c.to_vec())
            .collect::<Vec<_>>()
    );

    for bad in ["g 3 1\n1 1\n", "g 3 1\n2 1\n", "g 3 2\n0 1\n", "g 2 1\n0 5\n"] {
        println!("{:?} -> {}", bad, parse_edge_list(bad).unwrap_err());
    }
}
