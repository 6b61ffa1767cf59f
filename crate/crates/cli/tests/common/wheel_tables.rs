//! Expected wheel tables, keyed by marker pattern X1..X6 (• on the
//! component, ○ off it).

/// Frame-locus classes divided by (L-1)^3.
pub const FRAME_TABLE: [(&str, &str); 64] = [
    ("••• •••", "0"),
    ("••○ ○••", "0"),
    ("•○○ ○••", "L^3"),
    ("○•○ ○○•", "L^3(L+2)"),
    ("○•• •••", "0"),
    ("••○ •○•", "L(L+1)"),
    ("•○○ •○•", "L^2(L+1)"),
    ("○•○ ○•○", "L^3(L+1)"),
    ("•○• •••", "0"),
    ("••○ ••○", "0"),
    ("•○○ ••○", "L^3"),
    ("○•○ •○○", "L^3(L+2)"),
    ("••○ •••", "0"),
    ("••• ○○•", "L^2"),
    ("•○• ○○•", "L(L^2+2L-1)"),
    ("○•• ○○○", "L^3(L+1)"),
    ("••• ○••", "0"),
    ("••• ○•○", "0"),
    ("•○• ○•○", "L^2(L+1)"),
    ("•○○ ○○•", "L^3(L+2)"),
    ("••• •○•", "L"),
    ("••• •○○", "L^2"),
    ("•○• •○○", "L^2(L+1)"),
    ("•○○ ○•○", "L^3(L+1)"),
    ("••• ••○", "0"),
    ("○○○ •••", "0"),
    ("••○ ○○•", "L^2(L+1)"),
    ("•○○ •○○", "L^3(L+2)"),
    ("○○• •••", "0"),
    ("○○• ○••", "L^2(L+1)"),
    ("••○ ○•○", "0"),
    ("•○• ○○○", "L^3(L+2)"),
    ("○•○ •••", "0"),
    ("○○• •○•", "L^3"),
    ("••○ •○○", "L^2(L+1)"),
    ("••○ ○○○", "L^3(L+1)"),
    ("○•• ○••", "L^2"),
    ("○○• ••○", "L^3"),
    ("••• ○○○", "L^3"),
    ("○○○ ○○•", "L^3(L+1)^2"),
    ("○•• •○•", "L^2"),
    ("○•○ ○••", "L^3"),
    ("○○○ ○••", "L^3(L+1)"),
    ("○○○ ○•○", "L^3(L+1)^2"),
    ("○•• ••○", "0"),
    ("○•○ •○•", "L^2(L+1)"),
    ("○○○ •○•", "L^3(L+1)"),
    ("○○○ •○○", "L^3(L+1)^2"),
    ("•○○ •••", "0"),
    ("○•○ ••○", "L^3"),
    ("○○○ ••○", "L^3(L+1)"),
    ("○○• ○○○", "L^3(L+1)^2"),
    ("•○• ○••", "L^2"),
    ("○•• ○○•", "L^2(L+1)"),
    ("○○• ○○•", "L^3(L+2)"),
    ("○•○ ○○○", "L^3(L+1)^2"),
    ("•○• •○•", "L^2"),
    ("○•• ○•○", "L^3"),
    ("○○• ○•○", "L^3(L+2)"),
    ("•○○ ○○○", "L^3(L+1)^2"),
    ("•○• ••○", "L^2"),
    ("○•• •○○", "L^3"),
    ("○○• •○○", "L^3(L+1)"),
    ("○○○ ○○○", "L^3(L+1)(L^2+L+1)"),
];

/// Stratum classes, common factor included.
pub const STRATA_TABLE: [(&str, &str); 64] = [
    ("••• •••", "0"),
    ("••○ ○••", "0"),
    ("•○○ ○••", "L^2(L-1)^4"),
    ("○•○ ○○•", "L^2(L-1)^5"),
    ("○•• •••", "0"),
    ("••○ •○•", "L^2(L-1)^3"),
    ("•○○ •○•", "L^2(L-1)^4"),
    ("○•○ ○•○", "L^2(L-1)^5"),
    ("•○• •••", "0"),
    ("••○ ••○", "0"),
    ("•○○ ••○", "L^2(L-1)^4"),
    ("○•○ •○○", "L^2(L-1)^5"),
    ("••○ •••", "0"),
    ("••• ○○•", "L(L-1)^4"),
    ("•○• ○○•", "L^2(L-1)^4"),
    ("○•• ○○○", "L(L-1)^6"),
    ("••• ○••", "0"),
    ("••• ○•○", "0"),
    ("•○• ○•○", "L^2(L-1)^4"),
    ("•○○ ○○•", "L(L^2-L-1)(L-1)^4"),
    ("••• •○•", "L(L-1)^3"),
    ("••• •○○", "L(L-1)^4"),
    ("•○• •○○", "L(L-1)^5"),
    ("•○○ ○•○", "L^2(L-1)^5"),
    ("••• ••○", "0"),
    ("○○○ •••", "0"),
    ("••○ ○○•", "L^2(L-1)^4"),
    ("•○○ •○○", "L^2(L-1)^5"),
    ("○○• •••", "0"),
    ("○○• ○••", "L^2(L-1)^4"),
    ("••○ ○•○", "0"),
    ("•○• ○○○", "L^2(L-1)^5"),
    ("○•○ •••", "0"),
    ("○○• •○•", "L(L-1)^5"),
    ("••○ •○○", "L^2(L-1)^4"),
    ("••○ ○○○", "L^2(L-1)^5"),
    ("○•• ○••", "L^2(L-1)^3"),
    ("○○• ••○", "L^2(L-1)^4"),
    ("••• ○○○", "L(L-1)^5"),
    ("○○○ ○○•", "L(L^2-L-1)(L-1)^5"),
    ("○•• •○•", "L(L-1)^4"),
    ("○•○ ○••", "L^2(L-1)^4"),
    ("○○○ ○••", "L^2(L-1)^5"),
    ("○○○ ○•○", "L^2(L-1)^6"),
    ("○•• ••○", "0"),
    ("○•○ •○•", "L^2(L-1)^4"),
    ("○○○ •○•", "L^2(L-1)^5"),
    ("○○○ •○○", "L^2(L-1)^6"),
    ("•○○ •••", "0"),
    ("○•○ ••○", "L^3(L-1)^3"),
    ("○○○ ••○", "L^2(L-1)^5"),
    ("○○• ○○○", "L^2(L-1)^6"),
    ("•○• ○••", "L^2(L-1)^3"),
    ("○•• ○○•", "L(L-1)^5"),
    ("○○• ○○•", "L^2(L-1)^5"),
    ("○•○ ○○○", "L^2(L-1)^6"),
    ("•○• •○•", "L(L-1)^4"),
    ("○•• ○•○", "L^2(L-1)^4"),
    ("○○• ○•○", "L^2(L-1)^5"),
    ("•○○ ○○○", "L(L^2-L-1)(L-1)^5"),
    ("•○• ••○", "L^2(L-1)^3"),
    ("○•• •○○", "L(L-1)^5"),
    ("○○• •○○", "L(L-1)^6"),
    ("○○○ ○○○", "L(L^2-L-1)(L-1)^6"),
];
