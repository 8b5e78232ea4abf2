//! Certifies the [[5,1,3]] code from its four symplectic generators and
//! checks the result on the dense state space.

use stabforge::bounds::{hamming, singleton};
use stabforge::code::{Budget, SymplecticCode};
use stabforge::gf::Field;
use stabforge::stabilizer::{certify_stabilizer, render_human};
use stabforge::statevec::{eigenspace_dims, kl_verify, GeneratorSet, KlOutcome};

fn main() -> stabforge::Result<()> {
    let f = Field::gf(2)?;
    let rows = vec![
        vec![1, 1, 0, 0, 0, 0, 0, 1, 0, 1],
        vec![0, 1, 1, 0, 0, 1, 0, 0, 1, 0],
        vec![0, 0, 1, 1, 0, 0, 1, 0, 0, 1],
        vec![0, 0, 0, 1, 1, 1, 0, 1, 0, 0],
    ];
    let c = SymplecticCode::new(&f, 5, &rows)?;
    let code = certify_stabilizer(&c, Budget::default())?;
    print!("{}", render_human(code.params()));
    println!("{}", singleton(code.params()));
    println!("{}", hamming(code.params()));

    let g = GeneratorSet::from_code(&code)?;
    for op in g.operators() {
        println!("generator {op}");
    }
    println!("eigenspace dimensions: {:?}", eigenspace_dims(&g)?);
    for delta in 2..=3 {
        match kl_verify(&g, delta)? {
            KlOutcome::Pass { errors_checked, .. } => println!("KL delta={delta}: pass ({errors_checked} errors)"),
            KlOutcome::Fail(w) => println!("KL delta={delta}: fail at {} <c_{}|E|c_{}> = {}", w.error, w.i, w.j, w.value),
        }
    }
    Ok(())
}
