use std::process::Command;

fn ktern(args: &[&str]) -> (Option<i32>, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_ktern"))
        .args(args)
        .output()
        .expect("spawn ktern");
    (
        out.status.code(),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn success_negative_and_error() {
    let (code, out, _) = ktern(&["enumerate", "8"]);
    assert_eq!(code, Some(0));
    assert_eq!(out, "n=8 all=7 idempotent=3 commutative=2\n");

    let (code, out, _) = ktern(&["iso", "Z2xZ4@(1,0)", "Z2xZ4@(0,2)"]);
    assert_eq!(code, Some(1));
    assert_eq!(out, "isomorphic=false\n");

    let (code, _, err) = ktern(&["check", "Z4@"]);
    assert_eq!(code, Some(2));
    assert!(err.contains("Z4@:1:4:"), "{err}");
}

#[test]
fn color_kishino_binary() {
    let (code, out, _) = ktern(&["color", "builtin:kishino", "--flat", "Z2xZ2@(1,1)"]);
    assert_eq!(code, Some(0));
    assert!(out.contains("count=4"));
}

#[test]
fn malformed_diagram_files_exit_two_with_position() {
    let dir = std::env::temp_dir().join(format!("ktern-exit-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cases = [
        ("regions 3\ncrossing flat 0 1 5 2\n", "2:19:"),
        ("regions 3\ncrossing twisted 0 1 2 2\n", "2:10:"),
        ("regions\n", "1:8:"),
        ("crossing flat 0 0 0 0\n", "1:1:"),
        ("regions 2\ncrossing flat 0 1 1\n", "2:20:"),
        ("regions 2\ncrossing flat 0 1 1 1 7\n", "2:23:"),
        ("regions -2\n", "1:9:"),
        ("", "1:1:"),
    ];
    for (i, (text, pos)) in cases.iter().enumerate() {
        let path = dir.join(format!("bad{i}.txt"));
        std::fs::write(&path, text).unwrap();
        let p = path.to_str().unwrap();
        let (code, out, err) = ktern(&["color", p, "--flat", "Z2@0"]);
        assert_eq!(code, Some(2), "{text:?}");
        assert!(out.is_empty());
        assert!(err.contains(&format!("{p}:{pos}")), "{text:?}: {err}");
    }
}

#[test]
fn malformed_specs_and_tables_exit_two() {
    for (arg, pos) in [("Z4@", "1:4:"), ("Z2xZ2@(1,2)", "1:7:"), ("Zq@0", "1:2:")] {
        let (code, _, err) = ktern(&["check", arg]);
        assert_eq!(code, Some(2), "{arg}");
        assert!(err.contains(&format!("{arg}:{pos}")), "{arg}: {err}");
    }
    let path = std::env::temp_dir().join(format!("ktern-table-{}.txt", std::process::id()));
    std::fs::write(&path, "ternary 2\n0 0 0 5\n").unwrap();
    let p = path.to_str().unwrap();
    let (code, _, err) = ktern(&["check", p]);
    assert_eq!(code, Some(2));
    assert!(err.contains(&format!("{p}:2:")), "{err}");
}
