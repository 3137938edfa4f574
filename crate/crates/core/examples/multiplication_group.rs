//! Orders of right multiplication groups of the bundled loops and of a twist.

use rightloop::analysis::right_mult_group;
use rightloop::corpus;
use rightloop::twist::{twist, TwistSpec};
use rightloop::Permutation;

fn main() {
    for (name, l) in corpus::all_loops() {
        let r = right_mult_group(&l, 50_000);
        println!(
            "{name:>10}: order {:>6}, {} generators, closed {}",
            r.order, r.generators, r.closed
        );
    }
    let z6 = corpus::cyclic(6);
    let spec = TwistSpec::new(
        [2],
        Permutation::from_images(vec![0, 5, 4, 3, 2, 1]).unwrap(),
        0,
    )
    .unwrap();
    let r = right_mult_group(&twist(&z6, &spec).unwrap(), 1_000_000);
    println!("twisted z6: order {}, {} generators", r.order, r.generators);
}
