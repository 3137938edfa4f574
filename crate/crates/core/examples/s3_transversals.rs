//! Every normalized right transversal of the subgroups of S3, with the
//! induced right loops and the maps f, σ, θ.

use rightloop::corpus;
use rightloop::table::{validate, LoopKind};
use rightloop::transversal::{
    c_groupoid, enumerate_nrts, induced_operation, nrt_count, reconstruction_failures,
    right_cosets, subgroup_closure, theta_action_check, FiniteGroup,
};

fn main() {
    let g = FiniteGroup::from_loop(&corpus::symmetric3()).unwrap();
    for gen in ["s0", "r1"] {
        let h = subgroup_closure(&g, [g.index_of(gen).unwrap()]).unwrap();
        let cosets = right_cosets(&h);
        println!(
            "H = <{gen}>, |H| = {}, {} cosets, {} transversals",
            h.order(),
            cosets.len(),
            nrt_count(&h, &cosets)
        );
        for s in enumerate_nrts(&h, &cosets) {
            let induced = induced_operation(&s);
            let data = c_groupoid(&s).unwrap();
            let nontrivial_f = (0..s.len())
                .flat_map(|x| (0..s.len()).map(move |y| (x, y)))
                .filter(|&(x, y)| data.f(x, y) != g.identity())
                .count();
            println!(
                "  S = {{{}}}: {}, group: {}, f != 1 on {nontrivial_f} pairs, reconstruction failures {}, θ action {}",
                s.names().join(", "),
                validate(induced.table(), 0, LoopKind::RightLoop).unwrap().to_line(induced.table()),
                validate(induced.table(), 0, LoopKind::Group).unwrap().is_valid(),
                reconstruction_failures(&data, &induced),
                if theta_action_check(&data).holds() { "holds" } else { "fails" },
            );
        }
    }
    let h = subgroup_closure(&g, [g.index_of("s0").unwrap()]).unwrap();
    let cosets = right_cosets(&h);
    let last = enumerate_nrts(&h, &cosets).last().unwrap();
    print!("{}", c_groupoid(&last).unwrap().export());
}
