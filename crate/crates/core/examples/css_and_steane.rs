//! CSS codes from nested binary codes, and a Steane enlargement.

use stabforge::code::format;
use stabforge::code::{Budget, LinearCode};
use stabforge::gf::Field;
use stabforge::stabilizer::{css, render_human, steane_enlarge};
use std::path::Path;

fn classical(name: &str) -> stabforge::Result<LinearCode> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name);
    match format::read(&path)? {
        format::CodeFile::Linear(c) => Ok(c),
        _ => unreachable!("{name} holds a linear code"),
    }
}

fn main() -> stabforge::Result<()> {
    let b = Budget::default();
    let hamming = classical("hamming7.lin")?;
    let steane = css(&hamming, &hamming, b)?;
    print!("{}", render_human(steane.params()));

    let f = Field::gf(2)?;
    let even6 = LinearCode::new(&f, 6, &(1..6).map(|i| {
        let mut r = vec![0; 6];
        r[0] = 1;
        r[i] = 1;
        r
    }).collect::<Vec<_>>())?;
    print!("{}", render_human(css(&even6, &even6, b)?.params()));

    let rm = classical("rm24.lin")?;
    let even16 = classical("even16.lin")?;
    print!("{}", render_human(&steane_enlarge(&rm, &even16, b)?));
    Ok(())
}
