//! Dense-state check of the [[4,2,2]] and [[7,1,3]] codes, plus the
//! projectors onto every syndrome space.

use stabforge::code::{Budget, LinearCode};
use stabforge::gf::Field;
use stabforge::stabilizer::css;
use stabforge::statevec::{eigenspace_dims, group_sum, kl_verify, projector_apply, GeneratorSet, State};

fn main() -> stabforge::Result<()> {
    let f = Field::gf(2)?;
    let even4 = LinearCode::new(&f, 4, &[vec![1, 1, 0, 0], vec![0, 1, 1, 0], vec![0, 0, 1, 1]])?;
    let hamming = LinearCode::new(
        &f,
        7,
        &[
            vec![1, 0, 0, 0, 0, 1, 1],
            vec![0, 1, 0, 0, 1, 0, 1],
            vec![0, 0, 1, 0, 1, 1, 0],
            vec![0, 0, 0, 1, 1, 1, 1],
        ],
    )?;
    for (c, d) in [(&even4, 2), (&hamming, 3)] {
        let code = css(c, c, Budget::default())?;
        let g = GeneratorSet::from_code(&code)?;
        let dims = eigenspace_dims(&g)?;
        println!("{}: {} syndrome spaces of dimension {}", code.params().label(), dims.len(), dims[0]);
        for delta in [d - 1, d] {
            println!("  KL up to weight {delta}: {}", if kl_verify(&g, delta)?.passed() { "pass" } else { "fail" });
        }
        let seed = group_sum(&g, &State::basis(&vec![0; c.n()])?)?;
        let back = projector_apply(&g, &vec![0; g.len()], &seed)?;
        println!("  |seed| = {:.3}, projector moves it by {:.1e}", seed.norm(), back.max_diff(&seed));
    }
    Ok(())
}
