use std::process::{Command, Output};

use gkdim_cli::record::{read_records, write_records, Format, OutputRecord, Source};

fn gkdim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gkdim"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn one_record(args: &[&str]) -> OutputRecord {
    let out = gkdim(args);
    assert!(out.status.success(), "{args:?}: {}", stderr(&out));
    let mut recs = read_records(&stdout(&out), Format::Json).unwrap();
    assert_eq!(recs.len(), 1);
    recs.remove(0)
}

#[test]
fn compute_scalar_points() {
    let r = one_record(&[
        "compute", "--type", "B", "--n", "3", "--p", "3", "--z", "-1",
    ]);
    assert_eq!(
        (r.gkdim, r.dim_u, r.reducible),
        (Some(5), Some(6), Some(true))
    );
    assert_eq!(r.z.as_deref(), Some("-1"));

    let r = one_record(&[
        "compute", "--type", "C", "--n", "4", "--p", "1", "--z", "-1",
    ]);
    assert_eq!(
        (r.gkdim, r.dim_u, r.reducible),
        (Some(7), Some(7), Some(false))
    );
    assert_eq!(r.source, Source::Algorithm);

    let r = one_record(&[
        "compute", "--type", "A", "--n", "6", "--p", "3", "--z", "-2",
    ]);
    assert_eq!(r.gkdim, Some(8));
    assert_eq!(r.branch.as_deref(), Some("A#2"));
    assert_eq!(r.source, Source::Both);
    assert_eq!(r.wallach.as_deref(), Some("2nd Wallach rep of SU(3,3)"));
}

#[test]
fn compute_from_weight() {
    let r = one_record(&["compute", "--type", "A", "--n", "3", "--weight", "1,0,-1"]);
    assert_eq!(r.gkdim, Some(0));
    assert_eq!((r.p, r.z, r.dim_u), (None, None, None));

    let r = one_record(&["compute", "--type", "C", "--n", "4", "--weight", "3,3,2,1"]);
    assert_eq!(r.gkdim, Some(7));
}

#[test]
fn misprinted_table_point_is_not_marked_as_agreeing() {
    let r = one_record(&[
        "compute", "--type", "B", "--n", "5", "--p", "4", "--z", "-2",
    ]);
    assert_eq!(r.gkdim, Some(15));
    assert_eq!(r.branch.as_deref(), Some("B.p_even#5"));
    assert_eq!(r.source, Source::Algorithm);
}

#[test]
fn usage_and_parse_errors_exit_2() {
    let out = gkdim(&[
        "compute", "--type", "B", "--n", "3", "--p", "3", "--z", "1.5",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("`1.5`"));

    let out = gkdim(&["compute", "--type", "B", "--n", "3", "--weight", "1,x,2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("`x`"));

    let out = gkdim(&["compute", "--type", "B", "--n", "3", "--weight", "1,2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("expected 3"));

    let out = gkdim(&["compute", "--type", "B", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));

    let out = gkdim(&["set", "--type", "E", "--n", "6", "--p", "1"]);
    assert_eq!(out.status.code(), Some(2));

    let out = gkdim(&["set", "--type", "D", "--n", "2", "--p", "1"]);
    assert_eq!(out.status.code(), Some(2));

    let out = gkdim(&["selfcheck", "--grid", "1/2,,1"]);
    assert_eq!(out.status.code(), Some(2));

    let out = gkdim(&["selfcheck", "--max-n", "99"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reducible_and_set() {
    let r = one_record(&[
        "reducible",
        "--type",
        "B",
        "--n",
        "3",
        "--p",
        "3",
        "--z",
        "-2",
    ]);
    assert_eq!((r.reducible, r.source), (Some(true), Source::Both));
    let r = one_record(&[
        "reducible",
        "--type",
        "B",
        "--n",
        "3",
        "--p",
        "3",
        "--z",
        "-3",
    ]);
    assert_eq!(r.reducible, Some(false));

    let r = one_record(&["set", "--type", "C", "--n", "4", "--p", "4"]);
    let set = r.set.unwrap();
    assert_eq!(
        (set[0].base.as_str(), set[0].step.as_str()),
        ("-3/2", "1/2")
    );
    assert_eq!(r.source, Source::ClosedForm);
}

#[test]
fn first_points_closed_and_searched_agree() {
    for (t, n, p) in [
        ("B", "3", "3"),
        ("C", "4", "1"),
        ("D", "5", "2"),
        ("B", "5", "1"),
    ] {
        let closed = one_record(&["first", "--type", t, "--n", n, "--p", p]);
        let searched = one_record(&["first", "--type", t, "--n", n, "--p", p, "--search"]);
        assert_eq!(closed.first_points, searched.first_points, "{t} {n} {p}");
        assert_eq!(searched.source, Source::Algorithm);
    }
    // a floor above the minimum finds a later point
    let r = one_record(&[
        "first", "--type", "B", "--n", "3", "--p", "3", "--search", "--floor", "-1",
    ]);
    assert_eq!(r.first_points.unwrap()[0].z, "-1");
}

#[test]
fn table_spot_rows() {
    let find = |t: &str, n: &str, p: usize| {
        let out = gkdim(&["table", "--type", t, "--n", n, "--format", "csv"]);
        assert!(out.status.success());
        read_records(&stdout(&out), Format::Csv)
            .unwrap()
            .into_iter()
            .find(|r| r.p == Some(p))
            .unwrap()
    };
    let base_step = |r: &OutputRecord| {
        let c = &r.set.as_ref().unwrap()[0];
        (c.base.clone(), c.step.clone())
    };
    assert_eq!(base_step(&find("A", "3", 1)), ("0".into(), "1".into()));
    assert_eq!(base_step(&find("B", "3", 3)), ("-2".into(), "1".into()));
    assert_eq!(base_step(&find("C", "4", 4)), ("-3/2".into(), "1/2".into()));
}

#[test]
fn csv_and_json_carry_the_same_records() {
    for t in ["A", "B", "C", "D"] {
        let lo = if t == "D" { "3" } else { "2" };
        let range = format!("{lo}..7");
        let csv = gkdim(&["table", "--type", t, "--n", &range, "--format", "csv"]);
        let json = gkdim(&["table", "--type", t, "--n", &range, "--format", "json"]);
        let from_csv = read_records(&stdout(&csv), Format::Csv).unwrap();
        let from_json = read_records(&stdout(&json), Format::Json).unwrap();
        assert!(!from_csv.is_empty());
        assert_eq!(from_csv, from_json, "type {t}");

        // re-serializing reproduces the bytes
        for (format, text) in [(Format::Csv, stdout(&csv)), (Format::Json, stdout(&json))] {
            let mut buf = Vec::new();
            write_records(&mut buf, &read_records(&text, format).unwrap(), format).unwrap();
            assert_eq!(String::from_utf8(buf).unwrap(), text);
        }
    }
}

#[test]
fn rationals_are_canonical_in_both_formats() {
    let csv = stdout(&gkdim(&[
        "table", "--type", "C", "--n", "2..6", "--format", "csv",
    ]));
    let json = stdout(&gkdim(&["table", "--type", "C", "--n", "2..6"]));
    for text in [&csv, &json] {
        assert!(!text.contains("/1,") && !text.contains("/1\"") && !text.contains("/1|"));
        assert!(!text.contains("2/4") && !text.contains("/-"));
    }
}

#[test]
fn timestamps_go_to_stderr_only() {
    let args = ["set", "--type", "B", "--n", "4", "--p", "2"];
    let plain = gkdim(&args);
    let mut with = args.to_vec();
    with.push("--timestamps");
    let stamped = gkdim(&with);
    assert_eq!(plain.stdout, stamped.stdout);
    assert!(plain.stderr.is_empty());
    assert!(stderr(&stamped).contains("elapsed_ms="));
}

#[test]
fn selfcheck_small_rank_passes() {
    let out = gkdim(&["selfcheck", "--max-n", "4", "--grid", "1/2,1@1/3"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("PASS table_equivalence"));
    assert!(text.ends_with("11 suites, 0 failed\n"));
}
