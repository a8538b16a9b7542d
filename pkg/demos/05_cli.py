"""The fgt command-line tool, driven in-process.

Every library capability is scriptable through `fgt SUBCOMMAND`; the
exit code contract is 0 = success/yes, 1 = boolean no, 2 = any error.
This demo calls the same entry point the console script uses.  Run with
`python3 demos/05_cli.py`.
"""

from freegroups.cli import run

CALLS = [
    (["reduce", "-n", "2", "abBA"], ""),
    (["cyclic", "-n", "2", "Babab"], ""),
    (["graph", "-n", "2", "baB"], ""),
    (["member", "-n", "2", "baB", "-w", "baaB"], ""),
    (["member", "-n", "2", "baB", "-w", "b"], ""),
    (["basis", "-n", "2", "aa ab ba"], ""),
    (["intersect", "-n", "2", "aa", "aaa"], ""),
    (["conjugate", "-n", "2", "a", "baB"], ""),
    # iso reads two blank-line-separated graphs from stdin
    (["iso", "-n", "2"],
     "v 2\nbase 0\ne 0 1 b\ne 1 1 a\n"
     "\n"
     "v 2\nbase 1\ne 0 0 a\ne 1 0 b\n"),
    (["wmin", "-n", "2", "ab", "--steps"], ""),
    (["orbit", "-n", "2", "a"], ""),
    (["primitive", "-n", "2", "aab"], ""),
    (["good", "-n", "2", "a", "b"], ""),
    (["dist2-split", "-n", "2", "split a | b", "split ab | b"], ""),
    (["dist2-word", "-n", "2", "ab", "a"], ""),
    (["prim-intersect", "-n", "2", "split a | b", "A", "split b | a", "B"], ""),
    (["nielsen-bound", "-n", "2", "split a | b", "split ab | b"], ""),
    # errors are reported on stderr with exit code 2
    (["member", "-n", "2", "baB", "-w", "q"], ""),
    # custom generator names via --alphabet
    (["reduce", "--alphabet", "xy", "xyYX"], ""),
]

for argv, stdin in CALLS:
    code, out, err = run(argv, stdin)
    print("$ fgt " + " ".join("'%s'" % a if " " in a else a for a in argv))
    for line in out.splitlines():
        print("  " + line)
    for line in err.splitlines():
        print("  ! " + line)
    print("  (exit %d)" % code)
