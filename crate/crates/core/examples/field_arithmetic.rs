//! GF(4) arithmetic, Hermitian inner products and the LCD test on a small
//! hand-written code.

use lcd4::{Gf4, Gf4Matrix, Gf4Vector, LinearCode};

fn main() -> lcd4::Result<()> {
    println!("  *  {}", Gf4::ALL.map(|b| b.to_string()).join(" "));
    for a in Gf4::ALL {
        println!("  {a}  {}", Gf4::ALL.map(|b| (a * b).to_string()).join(" "));
    }
    println!(
        "conj(w) = {}, inv(w) = {}",
        Gf4::OMEGA.conj(),
        Gf4::OMEGA.inv().unwrap()
    );

    let x: Gf4Vector = "1 w W 0".parse()?;
    let y: Gf4Vector = "w 1 1 1".parse()?;
    println!(
        "<x,y>_H = {}, <x,x>_H = {}",
        x.hermitian_inner_product(&y)?,
        x.hermitian_inner_product(&x)?
    );

    let g = Gf4Matrix::from_rows(&[x.as_slice(), y.as_slice()])?;
    let code = LinearCode::new(g)?;
    println!("G G^H =\n{}", code.hermitian_gram());
    println!(
        "{} hermitian lcd={} euclidean lcd={}",
        code.params(),
        code.is_hermitian_lcd(),
        code.is_euclidean_lcd()
    );
    Ok(())
}
