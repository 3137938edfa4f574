//! The right loops Z^B, their affine right translations and the transversal
//! T_B of H = {1, x} in the infinite dihedral group.

use num_bigint::BigInt;
use rightloop::affine::{affine_support, isomorphism_check, DinfElement, ZbLoop};

fn main() {
    let x = DinfElement::new(true, 0);
    let y = DinfElement::new(false, 1);
    println!("x·x = {}, x·y·x = {}", x.mul(&x), x.mul(&y).mul(&x));

    let bs: [&[i64]; 4] = [&[], &[2], &[1, 5, -3], &[-1, 1]];
    for b in bs {
        let l = ZbLoop::new(b.iter().copied()).unwrap();
        let rep = isomorphism_check(&l, 100);
        println!(
            "B = {b:?}: T_B vs Z^B on [-100, 100]^2: {} pairs, {} mismatches",
            rep.pairs_checked,
            rep.mismatches.len()
        );
        for k in [-3i64, 2, 5] {
            let m = l.right_translation(&BigInt::from(k));
            println!("  R'_{k} = {m}, support {:?}", affine_support(&m));
        }
    }
    let l = ZbLoop::new([2]).unwrap();
    let (i, k) = (BigInt::from(3), BigInt::from(2));
    let t = l.transversal_element(&i).mul(&l.transversal_element(&k));
    println!("B = {{2}}: t_3·t_2 = {t}, so 3 ∘' 2 = {}", l.op(&i, &k));
}
