"""Tour of the basic arithmetic: pointwise join, composition, powers.

Run with: python3 demos/01_chain_arithmetic.py
"""

from chainendo.core import (
    ChainEndo,
    all_endomorphisms,
    constant,
    format_compact,
    identity,
    parse_compact,
)


def show(label, endo):
    print(f"  {label:<14} values={endo.values}  compact={format_compact(endo)!r}")


def main():
    print("Monotone self-maps of the chain 0 < 1 < 2 < 3")
    x = parse_compact("1_2 2 3", 4)
    y = ChainEndo(4, (0, 0, 1, 3))
    show("x", x)
    show("y", y)

    print("\nAddition is the pointwise maximum:")
    show("x + y", x + y)
    print("It is idempotent and commutative; x + x == x:", x + x == x)

    print("\nMultiplication is composition, left factor first:")
    show("x * y", x * y)
    show("y * x", y * x)
    print("(x * y)(0) means: apply x, then y ->", (x * y)(0))

    print("\nPowers stabilize at an idempotent (here after three steps):")
    e = ChainEndo(5, (0, 0, 1, 2, 4))
    for k in range(1, 6):
        show(f"e^{k}", e ** k)
    limit = e.eventual_idempotent()
    show("stable", limit)
    print("stable power is idempotent:", limit * limit == limit)

    print("\nSpecial members:")
    show("identity", identity(4))
    show("const 2", constant(4, 2))

    total = sum(1 for _ in all_endomorphisms(4))
    print(f"\nThe whole semiring on four points has {total} members,")
    print("listed in lexicographic order, which extends the pointwise order.")


if __name__ == "__main__":
    main()
