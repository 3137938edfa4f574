//! Right and left division, translations and validation on small tables.

use rightloop::corpus;
use rightloop::table::{validate, LeftTranslation, LoopKind};
use rightloop::twist::{twist, TwistSpec};
use rightloop::Permutation;

fn main() {
    let z6 = corpus::cyclic(6);
    println!("Z6: 5/2 = {}", z6.name(z6.right_divide(5, 2)));
    println!("Z6: R_2 = {}", z6.right_translation(2));

    let eta = Permutation::from_images(vec![0, 5, 4, 3, 2, 1]).unwrap();
    let spec = TwistSpec::new([2], eta, 0).unwrap();
    let tw = twist(&z6, &spec).unwrap();
    println!("twisted: 5/2 = {}", tw.name(tw.right_divide(5, 2)));
    println!("twisted: R'_2 = {}", tw.right_translation(2));
    for kind in [LoopKind::RightLoop, LoopKind::Loop] {
        println!(
            "{}",
            validate(tw.table(), 0, kind).unwrap().to_line(tw.table())
        );
    }
    for u in 0..6 {
        match tw.left_translation(u) {
            LeftTranslation::Bijective(p) => println!("L_{u} = {p}"),
            LeftTranslation::NonBijective {
                collision: (a, b), ..
            } => {
                println!("L_{u} is not a bijection: {u}∘{a} = {u}∘{b}")
            }
        }
    }
    for x in 0..6 {
        for y in 0..6 {
            assert_eq!(tw.op(tw.right_divide(y, x), x), y);
        }
    }
    println!("(y/x)∘x = y for all 36 pairs");
}
