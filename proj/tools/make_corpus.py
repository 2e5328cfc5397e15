#!/usr/bin/env python3
"""Writes the bundled list-task corpus under data/tasks/.

Examples are sampled with a fixed seed, so rerunning reproduces the files.
"""
import os
import random
import sys

LETTERS = "abcdefghijklmnopqrstuvwxyz"
BASE = [
    ("head", ("list", "ELEM"), ("in", "out")),
    ("tail", ("list", "list"), ("in", "out")),
    ("empty", ("list",), ("in",)),
    ("decrement", ("int", "int"), ("in", "out")),
    ("geq", ("int", "int"), ("in", "in")),
    ("zero", ("int",), ("out",)),
    ("one", ("int",), ("out",)),
    ("even", ("int",), ("in",)),
    ("odd", ("int",), ("in",)),
]
EXTRA = {
    "increment": (("int", "int"), ("in", "out")),
    "element": (("list", "ELEM"), ("in", "out")),
    "cons": (("ELEM", "list", "list"), ("in", "in", "out")),
    "sum": (("int", "int", "int"), ("in", "in", "out")),
    "append": (("list", "ELEM", "list"), ("in", "in", "out")),
    "empty_out": (("list",), ("out",)),
    "c_6": (("int",), ("in",)),
    "c_9": (("int",), ("in",)),
}


def fmt(x):
    if isinstance(x, list):
        return "[" + ",".join(fmt(i) for i in x) + "]"
    return str(x)


def atom(pred, *args):
    return f"{pred}({','.join(fmt(a) for a in args)})"


def bias_text(head, head_types, head_dirs, extra, elem, max_clauses=2):
    preds = [(n, t, d) for n, t, d in BASE] + [(n, *EXTRA[n]) for n in extra]
    out = [f"max_clause({max_clauses}).", "max_vars(5).", "max_body(5).", "",
           f"head_pred({head},{len(head_types)})."]
    out += [f"body_pred({n},{len(t)})." for n, t, _ in preds]
    out.append("")

    def tup(xs):
        return "(" + ",".join(xs) + ("," if len(xs) == 1 else "") + ")"

    out.append(f"type({head},{tup(head_types)}).")
    out += [f"type({n},{tup([elem if x == 'ELEM' else x for x in t])})." for n, t, _ in preds]
    out.append("")
    out.append(f"direction({head},{tup(head_dirs)}).")
    out += [f"direction({n},{tup(d)})." for n, _, d in preds]
    return "\n".join(out) + "\n"


def letters(rng, lo, hi, distinct=False):
    n = rng.randint(lo, hi)
    if distinct:
        return rng.sample(LETTERS, n)
    return [rng.choice(LETTERS) for _ in range(n)]


def ints(rng, lo, hi, vals=range(0, 10)):
    return [rng.choice(list(vals)) for _ in range(rng.randint(lo, hi))]


def write(root, name, bias, bk, train, test):
    d = os.path.join(root, name)
    os.makedirs(d, exist_ok=True)
    with open(os.path.join(d, "bias.pl"), "w") as f:
        f.write(bias)
    with open(os.path.join(d, "bk.pl"), "w") as f:
        f.write(bk)
    for file, (pos, neg) in (("exs.pl", train), ("test.pl", test)):
        with open(os.path.join(d, file), "w") as f:
            f.writelines(f"pos({e}).\n" for e in pos)
            f.writelines(f"neg({e}).\n" for e in neg)


def unique(xs):
    seen, out = set(), []
    for x in xs:
        if x not in seen:
            seen.add(x)
            out.append(x)
    return out


def sample(rng, n_pos, n_neg, make_pos, make_neg):
    pos, neg = [], []
    while len(pos) < n_pos:
        e = make_pos(rng)
        if e and e not in pos:
            pos.append(e)
    while len(neg) < n_neg:
        e = make_neg(rng)
        if e and e not in neg and e not in pos:
            neg.append(e)
    return pos, neg


def split(rng, make_pos, make_neg, train=(10, 10), test=(5, 5)):
    tr = sample(rng, *train, make_pos, make_neg)
    while True:
        te = sample(rng, *test, make_pos, make_neg)
        if not set(te[0] + te[1]) & set(tr[0] + tr[1]):
            return tr, te


def task_last(rng):
    def pos(r):
        xs = letters(r, 1, 6)
        return atom("last", xs, xs[-1])

    def neg(r):
        xs = letters(r, 2, 6, distinct=True)
        return atom("last", xs, r.choice(xs[:-1]))

    return bias_text("last", ("list", "element"), ("in", "out"), [], "element"), "", split(rng, pos, neg)


def task_len(rng):
    def pos(r):
        xs = letters(r, 0, 6)
        return atom("len", xs, len(xs))

    def neg(r):
        xs = letters(r, 0, 6)
        n = len(xs) + r.choice([-2, -1, 1, 2])
        return atom("len", xs, n) if n >= 0 else None

    return bias_text("len", ("list", "int"), ("in", "out"), ["increment"], "element"), "", split(rng, pos, neg)


def task_evens(rng):
    evens = range(0, 10, 2)

    def pos(r):
        return atom("evens", ints(r, 0, 6, evens))

    def neg(r):
        xs = ints(r, 1, 6, evens)
        xs[r.randrange(len(xs))] = r.choice(range(1, 10, 2))
        return atom("evens", xs)

    return bias_text("evens", ("list",), ("in",), [], "int"), "", split(rng, pos, neg)


def task_finddup(rng):
    def pos(r):
        xs = letters(r, 2, 6, distinct=True)
        x = r.choice(xs)
        i = r.randrange(len(xs) + 1)
        ys = xs[:i] + [x] + xs[i:]
        return atom("finddup", ys, x)

    def neg(r):
        xs = letters(r, 1, 6, distinct=True)
        if r.random() < 0.5:
            x = r.choice(xs)
        else:
            x = r.choice([c for c in LETTERS if c not in xs])
        if r.random() < 0.5 and len(xs) >= 2:
            y = r.choice([c for c in xs if c != x] or xs)
            i = r.randrange(len(xs) + 1)
            xs = xs[:i] + [y] + xs[i:]
        if xs.count(x) >= 2:
            return None
        return atom("finddup", xs, x)

    return bias_text("finddup", ("list", "element"), ("in", "out"), ["element"], "element"), "", split(rng, pos, neg)


def task_sorted(rng):
    def pos(r):
        return atom("sorted", sorted(ints(r, 1, 6)))

    def neg(r):
        xs = sorted(ints(r, 2, 6))
        if xs[0] == xs[-1]:
            return None
        i = r.randrange(len(xs) - 1)
        while xs[i] == xs[i + 1]:
            i = r.randrange(len(xs) - 1)
        xs[i], xs[i + 1] = xs[i + 1], xs[i]
        return atom("sorted", xs)

    return bias_text("sorted", ("list",), ("in",), [], "int"), "", split(rng, pos, neg)


def task_sumlist(rng):
    def pos(r):
        xs = ints(r, 1, 5)
        return atom("sumlist", xs, sum(xs))

    def neg(r):
        xs = ints(r, 1, 5)
        prefix = {sum(xs[:k]) for k in range(1, len(xs) + 1)}
        s = sum(xs) + r.choice([-3, -2, -1, 1, 2, 3])
        return atom("sumlist", xs, s) if s >= 0 and s not in prefix else None

    return bias_text("sumlist", ("list", "int"), ("in", "out"), ["sum"], "int"), "", split(rng, pos, neg)


def task_contains(rng):
    others = [x for x in range(10) if x not in (6, 9)]

    def pos(r):
        xs = ints(r, 0, 5, others)
        xs.insert(r.randrange(len(xs) + 1), r.choice([6, 9]))
        return atom("contains", xs)

    def neg(r):
        return atom("contains", ints(r, 0, 6, others))

    bias = bias_text("contains", ("list",), ("in",), ["c_6", "c_9"], "int", max_clauses=3)
    return bias, "c_6(6).\nc_9(9).\n", split(rng, pos, neg)


def task_dropk(rng):
    def pos(r):
        xs = letters(r, 1, 6)
        k = r.randint(1, len(xs))
        return atom("dropk", xs, k, xs[k:])

    def neg(r):
        xs = letters(r, 2, 6, distinct=True)
        k = r.randint(1, len(xs))
        j = r.choice([j for j in range(0, len(xs) + 1) if j != k])
        return atom("dropk", xs, k, xs[j:])

    bias = bias_text("dropk", ("list", "int", "list"), ("in", "in", "out"), ["cons"], "element")
    return bias, "", split(rng, pos, neg)


def task_droplast(rng):
    def pos(r):
        xs = letters(r, 1, 6)
        return atom("droplast", xs, xs[:-1])

    def neg(r):
        xs = letters(r, 1, 6, distinct=True)
        ys = r.choice([xs, xs[1:], xs[:-2], xs[:-1][::-1] if len(xs) > 2 else xs[2:]])
        return None if ys == xs[:-1] else atom("droplast", xs, ys)

    bias = bias_text("droplast", ("list", "list"), ("in", "out"), ["cons"], "element")
    return bias, "", split(rng, pos, neg)


def task_reverse(rng):
    def pos(r):
        xs = letters(r, 0, 5)
        return atom("reverse", xs, xs[::-1])

    def neg(r):
        xs = letters(r, 2, 5, distinct=True)
        ys = r.choice([xs, xs[1:][::-1], xs[::-1][1:], xs[1:] + xs[:1]])
        return None if ys == xs[::-1] else atom("reverse", xs, ys)

    bias = bias_text("reverse", ("list", "list"), ("in", "out"), ["append", "empty_out"], "element")
    train, test = split(rng, pos, neg)
    # Rule out base cases that ignore one of the arguments.
    train[1].extend([atom("reverse", [], ["a"]), atom("reverse", ["b", "a"], [])])
    return bias, "empty_out([]).\n", (train, test)


TASKS = {
    "last": task_last,
    "len": task_len,
    "evens": task_evens,
    "finddup": task_finddup,
    "sorted": task_sorted,
    "sumlist": task_sumlist,
    "contains": task_contains,
    "dropk": task_dropk,
    "droplast": task_droplast,
    "reverse-lite": task_reverse,
}


def main():
    root = sys.argv[1] if len(sys.argv) > 1 else os.path.join(os.path.dirname(__file__), "..", "data", "tasks")
    for i, (name, make) in enumerate(sorted(TASKS.items())):
        rng = random.Random(1000 + i)
        bias, bk, (train, test) = make(rng)
        write(root, name, bias, bk, train, test)


if __name__ == "__main__":
    main()
