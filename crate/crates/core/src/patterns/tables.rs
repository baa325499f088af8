//! Zero-characterization tables, kept as pattern text and parsed once.

use alloc::boxed::Box;
use alloc::format;
use alloc::vec::Vec;

use once_cell::race::OnceBox;

use super::pattern::Pattern;

/// Zeros of `padp_{a,b}`, by column `(a, b)`. Row 1 is shared by all
/// columns.
const PADP_SHARED: &str = "[.* d 0*]";
const PADP_COLUMNS: [(&str, &[&str]); 4] = [
    ("padp00", &["[6 ^6* 7 .*]", "[7 ^7* 6 .*]", "[7 ^7* 0 g0*]"]),
    (
        "padp01",
        &[
            "[4 ^4* 5 .*]",
            "[4 ^4* 0 b0*]",
            "[5 ^5*]",
            "[5 ^5* 4 .*]",
            "[5 ^5* 1 b0*]",
            "[5 ^5* 2 g0*]",
            "[b0*]",
        ],
    ),
    (
        "padp10",
        &[
            "[2 ^2* 3 .*]",
            "[2 ^2* 0 a0*]",
            "[3 ^3*]",
            "[3 ^3* 2 .*]",
            "[3 ^3* 1 a0*]",
            "[3 ^3* 4 g0*]",
            "[a0*]",
        ],
    ),
    (
        "padp11",
        &[
            "[0 ^0*]",
            "[0 ^0* 1 .*]",
            "[0 ^0* 2 a0*]",
            "[0 ^0* 4 b0*]",
            "[1 ^1* 0 .*]",
            "[1 ^1* 3 a0*]",
            "[1 ^1* 5 b0*]",
            "[1 ^1* 6 g0*]",
            "[a0*]",
            "[b0*]",
        ],
    ),
];

/// Zeros of `adp^XR`: per column, the mark for the high part `ω′` and the
/// rows for the low part `ω`.
const XR_COLUMNS: [(&str, &[&str]); 7] = [
    (
        "[.* d 0 0*]",
        &[
            "[a0*]",
            "[b0*]",
            "[0 ^0*]",
            "[0 ^0* 1 .*]",
            "[0 ^0* 2 a0*]",
            "[0 ^0* 4 b0*]",
            "[0 ^0* 7]",
            "[0 ^0* 7 g1* 17]",
            "[1 ^1*]",
            "[1 ^1* 0 .*]",
            "[1 ^1* 3 a0*]",
            "[1 ^1* 5 b0*]",
            "[1 ^1* 6]",
            "[1 ^1* 6 g0* 06]",
        ],
    ),
    (
        "[.* e 2 2*]",
        &[
            "[a0*]",
            "[2 ^2*]",
            "[2 ^2* 3 .*]",
            "[2 ^2* 0 a0*]",
            "[2 ^2* 5 g1* 17]",
            "[3 ^3*]",
            "[3 ^3* 2 .*]",
            "[3 ^3* 1 a0*]",
            "[3 ^3* 4 g0* 06]",
        ],
    ),
    (
        "[.* e 4 4*]",
        &[
            "[b0*]",
            "[4 ^4*]",
            "[4 ^4* 5 .*]",
            "[4 ^4* 0 b0*]",
            "[4 ^4* 3 g1* 17]",
            "[5 ^5*]",
            "[5 ^5* 4 .*]",
            "[5 ^5* 1 b0*]",
            "[5 ^5* 2 g0* 06]",
        ],
    ),
    (
        "[.* d 6 6*]",
        &["[6 ^6* 7 .*]", "[6 ^6* 1 g1* 17]", "[7 ^7* 6 .*]", "[7 ^7* 0 g0* 06]"],
    ),
    ("[.* d]", &["[0*]", "[1*]"]),
    ("[.*]", &["[.* d 0 0*]", "[.* e 1 1*]"]),
    ("[g0*]", &["[.* d]"]),
];

/// One column of the `padp` zero table.
#[derive(Debug)]
pub struct PadpColumn {
    pub a: bool,
    pub b: bool,
    pub rows: Vec<Pattern>,
}

/// One column of the `adp^XR` zero table.
#[derive(Debug)]
pub struct XrColumn {
    /// 1-based column number.
    pub index: usize,
    pub mark: Pattern,
    pub rows: Vec<Pattern>,
}

fn parse(text: &str) -> Pattern {
    Pattern::parse(text).expect("table patterns are well formed")
}

/// Columns `padp00`, `padp01`, `padp10`, `padp11`, with row ids
/// `T3:<column>:row<k>`.
pub fn padp_table() -> &'static [PadpColumn; 4] {
    static CELL: OnceBox<[PadpColumn; 4]> = OnceBox::new();
    CELL.get_or_init(|| {
        Box::new(core::array::from_fn(|c| {
            let (name, rows) = PADP_COLUMNS[c];
            let mut parsed = Vec::with_capacity(rows.len() + 1);
            parsed.push(parse(PADP_SHARED).with_id(format!("T3:{name}:row1")));
            for (k, text) in rows.iter().enumerate() {
                parsed.push(parse(text).with_id(format!("T3:{name}:row{}", k + 2)));
            }
            PadpColumn {
                a: c >> 1 == 1,
                b: c & 1 == 1,
                rows: parsed,
            }
        }))
    })
}

/// The seven columns, with row ids `T4:<column>.<row>` and mark ids
/// `T4:<column>`.
pub fn xr_table() -> &'static [XrColumn; 7] {
    static CELL: OnceBox<[XrColumn; 7]> = OnceBox::new();
    CELL.get_or_init(|| {
        Box::new(core::array::from_fn(|c| {
            let (mark, rows) = XR_COLUMNS[c];
            XrColumn {
                index: c + 1,
                mark: parse(mark).with_id(format!("T4:{}", c + 1)),
                rows: rows
                    .iter()
                    .enumerate()
                    .map(|(k, text)| parse(text).with_id(format!("T4:{}.{}", c + 1, k + 1)))
                    .collect(),
            }
        }))
    })
}

/// Looks up a row of the `adp^XR` table by its `X.Y` coordinate.
pub fn xr_row(column: usize, row: usize) -> Option<&'static Pattern> {
    xr_table().get(column.checked_sub(1)?)?.rows.get(row.checked_sub(1)?)
}

/// Looks up any table entry by id: `T3:<column>:row<k>`, `T4:<X>.<Y>` or
/// the column mark `T4:<X>`.
pub fn lookup(id: &str) -> Option<&'static Pattern> {
    if let Some(rest) = id.strip_prefix("T4:") {
        return match rest.split_once('.') {
            Some((x, y)) => xr_row(x.parse().ok()?, y.parse().ok()?),
            None => Some(&xr_table().get(rest.parse::<usize>().ok()?.checked_sub(1)?)?.mark),
        };
    }
    padp_table()
        .iter()
        .flat_map(|c| c.rows.iter())
        .find(|p| p.id() == Some(id))
}
