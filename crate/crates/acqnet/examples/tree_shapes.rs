//! Tree certification and the low-diameter taxonomy: stars (diameter 2),
//! coupled stars (3) and double stars (4), with endpoint pruning.
//!
//! ```bash
//! cargo run -p acqnet --example tree_shapes
//! ```

use acqnet::graph::Graph;
use acqnet::named;
use acqnet::tree::certify_tree;

fn show(name: &str, g: &Graph) {
    match certify_tree(g) {
        Err(reason) => println!("{name}: not a tree ({reason:?})"),
        Ok(tree) => {
            let class = tree.classify();
            let centers: Vec<&str> = class.radial_center.iter().map(|&v| g.label(v)).collect();
            let pruned = tree.prune_endpoints().unwrap();
            println!(
                "{name}: {:?}, radius {}, radial center {{{}}}; pruning endpoints leaves {} vertices",
                class.kind,
                class.radius,
                centers.join(", "),
                pruned.n(),
            );
        }
    }
}

fn main() {
    show("star S6", &named::star(6));
    show("coupled star CS9", &named::coupled_star(9));
    show("double star DS11", &named::double_star(11));
    show("path P5", &named::path(5));
    show("path P7", &named::path(7));
    show("cycle C4", &named::cycle(4));

    // Pruning a double star exposes the inner star.
    let ds = named::double_star(11);
    let tree = certify_tree(&ds).unwrap();
    let inner = certify_tree(&tree.prune_endpoints().unwrap()).unwrap();
    println!(
        "double star DS11 pruned: {} vertices classified {:?}",
        inner.n(),
        inner.classify().kind
    );
}
