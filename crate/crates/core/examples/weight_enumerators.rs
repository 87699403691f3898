//! Weight enumerators computed directly and through the MacWilliams
//! identity, including a code too large to enumerate by its own codewords.

use lcd4::catalog;

fn main() -> lcd4::Result<()> {
    let c17 = catalog::build("C17_2")?;
    let direct = c17.weight_enumerator_direct();
    let via_dual = c17.weight_enumerator_via_dual()?;
    println!("C17_2:      {direct}");
    println!(
        "dual:       {}",
        c17.hermitian_dual()?.weight_enumerator_direct()
    );
    println!("agree:      {}", direct == via_dual);
    println!("pairs:      {}", direct.to_pairs());

    // 4^15 codewords, but the dual has only 64.
    let e18 = catalog::build("E18")?;
    let dual = e18.hermitian_dual()?.weight_enumerator_direct();
    let we = dual.macwilliams_transform(e18.n() - e18.k())?;
    println!("E18 dual:   {dual}");
    println!("E18:        A_3 = {}, total = {}", we.count(3), we.total());
    println!(
        "weight ≤ 3: {} codewords by direct search",
        e18.low_weight_codewords(3).len()
    );
    Ok(())
}
