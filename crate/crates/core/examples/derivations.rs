//! Shortening and puncturing: `C14 = S(C15, 4)`, `C19` is `C20` punctured
//! at its first coordinate, and `E17, …, E9` come from `E18` by repeated
//! shortening. Coordinates are 1-based.

use lcd4::catalog::{self, Construction};

fn main() -> lcd4::Result<()> {
    for cert in catalog::CERTIFICATES {
        let how = match &cert.construction {
            Construction::Explicit {
                transposed: false, ..
            } => "explicit (I | M)".to_string(),
            Construction::Explicit {
                transposed: true, ..
            } => "explicit (I | M), M stored transposed".to_string(),
            Construction::Shorten { parent, coordinate } => format!("S({parent}, {coordinate})"),
            Construction::Puncture { parent, coordinate } => {
                format!("{parent} punctured at {coordinate}")
            }
        };
        let code = catalog::build(cert.name)?;
        println!(
            "{:<6} {:<38} {:<12} lcd={}",
            cert.name,
            how,
            code.params().to_string(),
            code.is_hermitian_lcd()
        );
    }

    // Shortening at a coordinate outside every minimum-weight support can
    // keep d; LCD is not guaranteed and must be rechecked.
    let e18 = catalog::build("E18")?;
    for i in 1..=e18.n() {
        let s = e18.shorten(i)?;
        println!(
            "S(E18, {i:>2}) = {} lcd={}",
            s.params(),
            s.is_hermitian_lcd()
        );
    }
    Ok(())
}
