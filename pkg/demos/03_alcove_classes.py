"""Central, first-kind and second-kind alcoves of odd regular arrangements."""
from alcoves.harmonic import class_sizes, class_split, classify_alcoves, generate, genus

for n in (5, 7, 9, 11):
    c = classify_alcoves(generate(n))
    counts = c.counts()
    print(f"n={n}: total {c.total} = 1 + {counts['first']} + {sum(counts['second'].values())}"
          f"  (predicted {class_sizes(n)}), genus {genus(n)}")
    # Second-kind quadrilaterals come in layers j = 1 .. (n-5)/2, n per layer.
    for j, layer in sorted(c.second_kind.items()):
        example = layer[0]
        print(f"    layer j={j}: {len(layer)} quadrilaterals, e.g. lines {sorted(example.line_set)},"
              f" corners on rings {sorted(c.ring_contacts[example.face])}")

# Two class points per crossing split n(n-1) over the three classes.
for n in (5, 7, 9, 11, 13, 15):
    m, a, b, d = class_split(n)
    print(f"n={n}: {m} = {a} + {b} + {d}")
