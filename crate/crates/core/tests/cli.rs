use std::process::Command;

fn branch2(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_branch2"))
        .args(args)
        .env_remove("BRANCH2_CENSUS")
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn slope_words() {
    assert_eq!(
        branch2(&["slope", "decompose", "2/3"]),
        (0, "T S T^3 S\n".into(), String::new())
    );
    let (code, _, err) = branch2(&["slope", "decompose", "2/x"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error:"));
}

#[test]
fn usage_errors() {
    assert_eq!(branch2(&[]).0, 2);
    assert_eq!(branch2(&["census"]).0, 2);
    assert_eq!(
        branch2(&["--format", "xml", "slope", "decompose", "1"]).0,
        2
    );
    let (code, out, _) = branch2(&["--version"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("branch2 "));
}

#[test]
fn surgery_files() {
    let dir = std::env::temp_dir().join(format!("branch2-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("hopf.txt");
    std::fs::write(&path, "components: 2\nK 1 true\nC 1/2 true\n0 1\n1 0\n").unwrap();
    let path = path.to_str().unwrap();
    let (code, out, _) = branch2(&["--format", "machine", "surgery", "h1", path]);
    assert_eq!(code, 0);
    assert_eq!(out, "components=2\nh1_order=1\n");
    let (code, out, err) = branch2(&["--format", "machine", "surgery", "twist", path, "C", "-2"]);
    assert_eq!(code, 0, "{err}");
    assert!(
        out.contains("h1_order_before=1\nh1_order_after=1\n"),
        "{out}"
    );
    assert!(out.contains("component.0=K -1 true\n"), "{out}");
    assert_eq!(branch2(&["surgery", "twist", path, "Z", "1"]).0, 1);
}

#[test]
fn census_reports() {
    let (code, out, _) = branch2(&["--format", "machine", "census", "report", "10_98", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("quotient_count=1\n"), "{out}");
    assert!(out.contains("quotient.0.kind=3_1(1/2)\n"), "{out}");
    assert!(out.contains("covers_s3=false\n"), "{out}");
    let (_, out, _) = branch2(&["census", "report", "9_32", "1/5"]);
    assert!(out.contains("no two-fold branched quotients"), "{out}");
}

#[test]
fn census_override_file() {
    let dir = std::env::temp_dir().join(format!("branch2-census-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("tiny.txt");
    std::fs::write(
        &path,
        "row r stated=1 \"one knot\"\nknot 3_1 classes=S1S0 s1e_quotient=- higher=- row=r\n",
    )
    .unwrap();
    let path = path.to_str().unwrap();
    let (code, out, err) = branch2(&["--census", path, "census", "report", "3_1", "1"]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(out.lines().filter(|l| l.starts_with("quotient")).count(), 1);
    assert_eq!(
        branch2(&["--census", path, "census", "report", "4_1", "1"]).0,
        1
    );
}

#[test]
fn numerics() {
    assert_eq!(
        branch2(&["hyperbolic", "length", "1", "1"]).1,
        "3.14159265359\n"
    );
    let (code, out, _) = branch2(&["hyperbolic", "family", "inf"]);
    assert_eq!(code, 0);
    assert_eq!(out, "w,trace_a,trace_b,residual_a,residual_b,length_a,length_b\ninf,2,2,-,-,parabolic,parabolic\n");
}
