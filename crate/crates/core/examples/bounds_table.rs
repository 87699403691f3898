//! Tables of `d₄(n, k)` for the dimensions with closed forms, and the
//! assembled bounds for the parameters with explicit codes.

use lcd4::bounds::{self, d4_dimension_n_minus_1, d4_dimension_n_minus_2, d4_dimension_n_minus_3};

fn main() -> lcd4::Result<()> {
    println!("  n  d4(n,n-1)  d4(n,n-2)  d4(n,n-3)");
    for n in 2..=24 {
        let show = |r: lcd4::Result<usize>| r.map_or("-".to_string(), |v| v.to_string());
        println!(
            "{n:>3} {:>10} {:>10} {:>10}",
            d4_dimension_n_minus_1(n)?,
            show(d4_dimension_n_minus_2(n)),
            show(d4_dimension_n_minus_3(n))
        );
    }
    println!();
    for (n, k) in [
        (12, 6),
        (14, 6),
        (15, 7),
        (17, 6),
        (17, 7),
        (19, 7),
        (20, 7),
        (20, 8),
        (21, 18),
    ] {
        for r in bounds::bounds(n, k)? {
            println!("{r}");
        }
    }
    Ok(())
}
