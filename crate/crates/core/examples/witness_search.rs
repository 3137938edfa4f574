//! Breadth-first search over right-translation words for nonidentity maps
//! moving few points: plenty on a finite loop, none on Z^B.

use rightloop::affine::ZbLoop;
use rightloop::analysis::witness_search;
use rightloop::corpus;
use rightloop::Permutation;

fn main() {
    let l = corpus::steiner10();
    let gens: Vec<Permutation> = (0..l.order()).map(|a| l.right_translation(a)).collect();
    let found = witness_search(&gens, 4, 9);
    println!(
        "steiner10: {} words of length <= 4 moving at most 9 points",
        found.len()
    );
    for w in found.iter().take(5) {
        println!(
            "  {} moves {:?}",
            w.word.render(|g| l.name(g).to_string()),
            w.support.moved_count
        );
    }

    let z = ZbLoop::new([1, 5, -3]).unwrap();
    let (_, gens): (Vec<_>, Vec<_>) = z.translation_generators(5).into_iter().unzip();
    let found = witness_search(&gens, 10, 1_000_000);
    println!(
        "Z^B with B = {{1, 5, -3}}: {} finite-support words up to length 10",
        found.len()
    );
}
