use k3hilb::decomp::decompose_all;

#[test]
fn canonical_hodge_classes_of_five_points() {
    let tables = decompose_all(5, None, 5).unwrap();
    let counts: Vec<u64> = (2..=5)
        .map(|k| {
            tables
                .iter()
                .find(|t| t.n == 5 && t.degree == 2 * k)
                .unwrap()
                .mult(&[])
        })
        .collect();
    assert_eq!(counts, [2, 1, 4, 2]);
}

#[test]
fn nine_points_in_degree_ten() {
    let tables = decompose_all(9, None, 9).unwrap();
    let t = tables.iter().find(|t| t.n == 9 && t.degree == 10).unwrap();
    let expected: [(&[i64], u64); 8] = [
        (&[], 6),
        (&[1], 11),
        (&[2], 6),
        (&[1, 1], 4),
        (&[3], 4),
        (&[2, 1], 2),
        (&[4], 1),
        (&[5], 1),
    ];
    for (w, m) in expected {
        assert_eq!(t.mult(w), m, "{w:?}");
    }
}
