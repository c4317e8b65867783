use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_forest-hopf"))
        .args(args)
        .env_remove("FOREST_HOPF_MAX_DEGREE")
        .output()
        .unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

#[test]
fn coproduct_of_leaf() {
    assert_eq!(stdout(&["coproduct", "x"]), "mu_x * (1) ⊗ (1) + (1) ⊗ (x) + (x) ⊗ (1)");
    assert_eq!(
        stdout(&["--ascii", "coproduct", "x", "--method", "cuts"]),
        "mu_x * (1)o(1) + (1)o(x) + (x)o(1)"
    );
}

#[test]
fn counit_code_paths_agree() {
    assert_eq!(stdout(&["counit", "a[x]"]), "la_a*mu_x");
    assert_eq!(stdout(&["counit", "a[x]", "--closed"]), "la_a*mu_x");
}

#[test]
fn antipode_and_tilde() {
    assert_eq!(stdout(&["antipode", "x"]), "-2*mu_x * 1 - x");
    assert_eq!(stdout(&["tilde", "a b"]), "la_a*la_b * 1 + la_b * a + la_a * b + a b");
}

#[test]
fn product_and_subforests() {
    assert_eq!(stdout(&["product", "a[x]", "y"]), "a[x] y");
    let rows = stdout(&["subforests", "a[c b[x]]"]);
    assert_eq!(rows.lines().count(), 7);
    assert!(rows.contains("c b[x] | a | la_a * 1 + a"));
}

#[test]
fn weights_specialize_coefficients() {
    assert_eq!(
        stdout(&["--weights", "la_a=0,mu_x=1/2", "coproduct", "a[x]"]),
        "1/2 * (1) ⊗ (a) + (1) ⊗ (a[x]) + (x) ⊗ (a) + (a[x]) ⊗ (1)"
    );
}

#[test]
fn zero_weights_give_classical_cuts() {
    let zero = "la_a=0,la_b=0,la_c=0,mu_x=0,mu_y=0";
    assert_eq!(
        stdout(&["--weights", zero, "coproduct", "a[x y]"]),
        stdout(&["--weights", zero, "coproduct", "a[x y]", "--method", "cuts"])
    );
    assert_eq!(
        stdout(&["--weights", zero, "--ascii", "coproduct", "a[x]"]),
        "(1)o(a[x]) + (x)o(a) + (a[x])o(1)"
    );
}

#[test]
fn json_is_versioned() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["--format", "json", "counit", "x"])).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["result"][0]["coef"], "-1");
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["--format", "json", "enumerate", "--max-degree", "1", "--list"])).unwrap();
    assert_eq!(v["result"][1]["count"], "5");
}

#[test]
fn latex_uses_otimes() {
    assert_eq!(
        stdout(&["--format", "latex", "coproduct", "a"]),
        "\\lambda_{a} 1 \\otimes 1 + 1 \\otimes \\bullet_{a} + \\bullet_{a} \\otimes 1"
    );
}

#[test]
fn eval_renames() {
    assert_eq!(stdout(&["eval", "a[x y] x", "--rename", "x=y,y=x"]), "a[y x] y");
}

#[test]
fn enumerate_counts() {
    assert_eq!(
        stdout(&["--x", "x", "--omega", "a", "enumerate", "--max-degree", "2"]),
        "degree 0: 1\ndegree 1: 2\ndegree 2: 6"
    );
}

#[test]
fn check_all_passes() {
    let out = stdout(&["--x", "x", "--omega", "a,b", "check", "all", "--max-degree", "3", "--seed-specializations", "1"]);
    assert!(out.lines().all(|l| l.contains(": ok (")), "{out}");
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["coproduct", "x[y]"]).status.code(), Some(2));
    assert_eq!(run(&["coproduct", "z"]).status.code(), Some(2));
    assert_eq!(run(&["coproduct", "a[x"]).status.code(), Some(2));
    assert_eq!(run(&["check", "nonsense", "--max-degree", "1"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    let capped = Command::new(env!("CARGO_BIN_EXE_forest-hopf"))
        .args(["enumerate", "--max-degree", "3"])
        .env("FOREST_HOPF_MAX_DEGREE", "2")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(2));
}
