//! The geometric oracle against the counting formulas, and the oracle
//! itself against a cell-by-cell growth enumeration.

use std::collections::{BTreeMap, BTreeSet};

use polygram_core::oracle::{
    enumerate_polycubes, enumerate_polycubes_bounded, enumerate_polyominoes,
    enumerate_polyominoes_bounded, tally, Classifier, SizeBound,
};
use polygram_core::polycube::{count_fixed_plateaus, count_whd, table_c, VolumeVector};
use polygram_core::polyomino::{count_fixed_columns, count_width_height, table_b, HeightVector};
use polygram_core::BigCount;

#[test]
fn polyominoes_by_width_and_area() {
    let counts = tally(enumerate_polyominoes(10).unwrap(), Classifier::WidthArea).unwrap();
    let table = table_b(10, 10);
    for k in 1..=10u64 {
        for n in 1..=10u64 {
            let oracle = counts.get(&vec![k, n]).cloned().unwrap_or_default();
            assert_eq!(&oracle, table.get(&[k], n).unwrap(), "b({k},{n})");
        }
    }
    let totals: Vec<BigCount> = (1..=10).map(|n| table.column_sum(n).unwrap()).collect();
    let a006958: Vec<BigCount> = [1u32, 2, 4, 9, 20, 46, 105, 242, 557, 1285]
        .iter()
        .map(|&v| v.into())
        .collect();
    assert_eq!(totals, a006958);
}

#[test]
fn polyominoes_by_width_and_height() {
    let stream = enumerate_polyominoes_bounded(SizeBound::ExtentSum(10)).unwrap();
    let counts = tally(stream, Classifier::WidthHeight).unwrap();
    for k in 1..=9u64 {
        for n in 1..=10 - k {
            assert_eq!(counts[&vec![k, n]], count_width_height(k, n), "g({k},{n})");
        }
    }
}

#[test]
fn polyominoes_by_column_heights() {
    let counts = tally(
        enumerate_polyominoes(10).unwrap(),
        Classifier::FixedColumnHeights,
    )
    .unwrap();
    for (heights, count) in &counts {
        assert_eq!(
            count,
            &count_fixed_columns(&HeightVector::new(heights.clone()).unwrap())
        );
    }
    assert_eq!(counts[&vec![2, 3, 2]], BigCount::from(4u32));
}

#[test]
fn polycubes_by_width_and_volume() {
    let counts = tally(enumerate_polycubes(8).unwrap(), Classifier::WidthVolume).unwrap();
    let table = table_c(8, 8);
    for k in 1..=8u64 {
        for n in 1..=8u64 {
            let oracle = counts.get(&vec![k, n]).cloned().unwrap_or_default();
            assert_eq!(&oracle, table.get(&[k], n).unwrap(), "c({k},{n})");
        }
    }
}

#[test]
fn polycubes_by_bounding_box() {
    let stream = enumerate_polycubes_bounded(SizeBound::ExtentSum(9)).unwrap();
    let counts = tally(stream, Classifier::WidthHeightDepth).unwrap();
    let mut checked = 0;
    for k in 1..=7u64 {
        for n in 1..=8 - k {
            for m in 1..=9 - k - n {
                assert_eq!(counts[&vec![k, n, m]], count_whd(k, n, m), "s({k},{n},{m})");
                checked += 1;
            }
        }
    }
    assert_eq!(checked, counts.len());
}

#[test]
fn polycubes_by_plateau_volumes() {
    let counts = tally(
        enumerate_polycubes(8).unwrap(),
        Classifier::FixedPlateauVolumes,
    )
    .unwrap();
    for (volumes, count) in &counts {
        assert_eq!(
            count,
            &count_fixed_plateaus(&VolumeVector::new(volumes.clone()).unwrap())
        );
    }
}

// ---------------------------------------------------------------------------
// Cell-level cross-check of the oracle itself.

type Cell2 = (i64, i64);
type Cell3 = (i64, i64, i64);

fn normalize2(cells: &BTreeSet<Cell2>) -> BTreeSet<Cell2> {
    let mx = cells.iter().map(|c| c.0).min().unwrap();
    let my = cells.iter().map(|c| c.1).min().unwrap();
    cells.iter().map(|&(x, y)| (x - mx, y - my)).collect()
}

fn normalize3(cells: &BTreeSet<Cell3>) -> BTreeSet<Cell3> {
    let mx = cells.iter().map(|c| c.0).min().unwrap();
    let my = cells.iter().map(|c| c.1).min().unwrap();
    let mz = cells.iter().map(|c| c.2).min().unwrap();
    cells
        .iter()
        .map(|&(x, y, z)| (x - mx, y - my, z - mz))
        .collect()
}

/// All fixed (translation classes of) connected cell sets up to `max` cells.
fn grow<C: Ord + Copy>(
    seed: C,
    max: usize,
    neighbours: impl Fn(C) -> Vec<C>,
    normalize: impl Fn(&BTreeSet<C>) -> BTreeSet<C>,
) -> Vec<BTreeSet<C>> {
    let mut level: BTreeSet<BTreeSet<C>> = BTreeSet::from([BTreeSet::from([seed])]);
    let mut all: Vec<BTreeSet<C>> = level.iter().cloned().collect();
    for _ in 1..max {
        let mut next = BTreeSet::new();
        for shape in &level {
            for &c in shape {
                for n in neighbours(c) {
                    if !shape.contains(&n) {
                        let mut bigger = shape.clone();
                        bigger.insert(n);
                        next.insert(normalize(&bigger));
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        level = next;
    }
    all
}

/// Each column is a contiguous run, columns occupy consecutive x, and
/// column bottoms and tops are nondecreasing.
fn is_parallelogram_polyomino(cells: &BTreeSet<Cell2>) -> bool {
    let mut columns: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
    for &(x, y) in cells {
        columns.entry(x).or_default().push(y);
    }
    let mut extents = Vec::new();
    for (i, (&x, ys)) in columns.iter().enumerate() {
        if x != i as i64 {
            return false;
        }
        let (lo, hi) = (ys[0], *ys.last().unwrap());
        if (hi - lo + 1) as usize != ys.len() {
            return false;
        }
        extents.push((lo, hi));
    }
    extents
        .windows(2)
        .all(|w| w[0].0 <= w[1].0 && w[0].1 <= w[1].1)
}

/// Each x-slice is a full rectangle, and its bottom, top, front and back
/// are nondecreasing along x.
fn is_parallelogram_polycube(cells: &BTreeSet<Cell3>) -> bool {
    let mut slices: BTreeMap<i64, Vec<(i64, i64)>> = BTreeMap::new();
    for &(x, y, z) in cells {
        slices.entry(x).or_default().push((y, z));
    }
    let mut boxes = Vec::new();
    for (i, (&x, yz)) in slices.iter().enumerate() {
        if x != i as i64 {
            return false;
        }
        let (y0, y1) = (
            yz.iter().map(|c| c.0).min().unwrap(),
            yz.iter().map(|c| c.0).max().unwrap(),
        );
        let (z0, z1) = (
            yz.iter().map(|c| c.1).min().unwrap(),
            yz.iter().map(|c| c.1).max().unwrap(),
        );
        if ((y1 - y0 + 1) * (z1 - z0 + 1)) as usize != yz.len() {
            return false;
        }
        boxes.push((y0, y1, z0, z1));
    }
    boxes
        .windows(2)
        .all(|w| w[0].0 <= w[1].0 && w[0].1 <= w[1].1 && w[0].2 <= w[1].2 && w[0].3 <= w[1].3)
}

#[test]
fn oracle_polyominoes_match_cell_growth() {
    let grown: BTreeSet<_> = grow(
        (0, 0),
        8,
        |(x, y)| vec![(x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)],
        normalize2,
    )
    .into_iter()
    .filter(is_parallelogram_polyomino)
    .collect();
    let profiles: BTreeSet<_> = enumerate_polyominoes(8)
        .unwrap()
        .map(|p| normalize2(&p.cells()))
        .collect();
    assert_eq!(profiles.len(), enumerate_polyominoes(8).unwrap().count());
    assert_eq!(grown, profiles);
}

#[test]
fn oracle_polycubes_match_cell_growth() {
    let grown: BTreeSet<_> = grow(
        (0, 0, 0),
        6,
        |(x, y, z)| {
            vec![
                (x + 1, y, z),
                (x - 1, y, z),
                (x, y + 1, z),
                (x, y - 1, z),
                (x, y, z + 1),
                (x, y, z - 1),
            ]
        },
        normalize3,
    )
    .into_iter()
    .filter(is_parallelogram_polycube)
    .collect();
    let profiles: BTreeSet<_> = enumerate_polycubes(6)
        .unwrap()
        .map(|p| normalize3(&p.cells()))
        .collect();
    assert_eq!(profiles.len(), enumerate_polycubes(6).unwrap().count());
    assert_eq!(grown, profiles);
}
