// Regenerates the odd-order tables for F_2 (Euclidean) and F_4 (Hermitian)
// and lists every line that differs from the stored copy.

use abelian_lcd::counting::{diff_tables, golden_table, render_table};
use abelian_lcd::{generate_table, DualityContext, OrderFilter};

fn main() -> Result<(), abelian_lcd::Error> {
    for ctx in [
        DualityContext::euclidean(2, 1)?,
        DualityContext::hermitian(2, 1)?,
    ] {
        let rows = generate_table(ctx, 49, OrderFilter::OddOnly)?;
        let text = render_table(&rows, false);
        println!(
            "{} over GF({}): {} rows",
            ctx.variant(),
            ctx.field_size()?,
            rows.len()
        );
        for row in rows.iter().take(6) {
            println!(
                "  |G| = {:<3} {:<8} r = {:<3} codes = {}",
                row.order,
                row.group.to_string(),
                row.r_total,
                row.lcd_count
            );
        }
        println!("  ...");
        let golden = golden_table(ctx).expect("stored table");
        for m in diff_tables(golden, &text) {
            println!(
                "  line {}: stored {:?}, computed {:?}",
                m.line,
                m.expected.unwrap_or_default(),
                m.actual.unwrap_or_default()
            );
        }
    }
    Ok(())
}
