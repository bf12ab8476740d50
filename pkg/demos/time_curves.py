"""Measure verdict-time curves for the built-in families and fit growth bounds.

The interesting claim is the shape: the identity-matrix machines settle in
about the square root of the input length, the counter machine in about the
logarithm, and the someone decider in a flat two steps no matter how long
the word gets.  Each curve is fitted against its own bound and against the
next one down, where the divergence figure shows the data genuinely
outgrowing the smaller bound.
"""

from acaw import FAMILIES, fit_bound, measure_time_curve


def report(label, rows, bound, ceiling):
    fit = fit_bound(rows, bound, ceiling)
    flag = "pass" if fit.passed else "FAIL"
    print(
        f"{label:28s} {bound:6s} constant {fit.constant:7.3f}"
        f" divergence {fit.divergence:7.3f} ceiling {ceiling:g} {flag}"
    )
    return fit


def main():
    idmat = FAMILIES["idmat"]
    acc = measure_time_curve(idmat, range(1, 26))
    report("idmat acceptor, members", acc, "sqrt", 6)
    report("idmat acceptor, members", acc, "log", 6)

    dec = measure_time_curve(idmat, range(1, 26), mode="decider")
    report("idmat decider, + corrupt", dec, "sqrt", 6)

    bins = measure_time_curve(FAMILIES["bin"], range(1, 9))
    report("bin acceptor, members", bins, "log", 30)
    report("bin acceptor, members", bins, "const", 30)

    ks = list(range(1, 51)) + [100, 1000, 10000]
    someone = measure_time_curve(FAMILIES["someone"], ks, mode="decider")
    report("someone decider", someone, "const", 2)

    longest = max(someone, key=lambda r: r.n)
    print(f"\nlongest someone input: {longest.n} cells,"
          f" verdict {longest.verdict} in {longest.steps} step(s)")


if __name__ == "__main__":
    main()
