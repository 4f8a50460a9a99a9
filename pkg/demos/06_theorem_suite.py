"""Running the named-check registry over the default ring suite.

Every check T01..T24 verifies one structural statement per (ring, kind)
instance and reports holds / fails / vacuous with a machine-checkable
witness.  A handful of statements genuinely fail on spectra that miss
maximal ideals; those failures are the interesting output, not bugs.
"""

from collections import Counter

from idealspaces import REGISTRY, SuiteConfig, run_suite, search_counterexamples

cfg = SuiteConfig()
records = run_suite(cfg)
print(f"{len(records)} records over {len(cfg.ring_exprs)} rings x "
      f"{len(cfg.kinds)} kinds")
print(Counter(r.status for r in records))

print("\ntheorem-form failures (all on spectra without the partition-of-unity "
      "property, or on quotient/localization spectra that drop points):")
by_check = {}
for r in records:
    if r.status == "fails" and REGISTRY[r.id].form == "theorem":
        by_check.setdefault(r.id, []).append(f"{r.ring}/{r.kind}")
for cid in sorted(by_check):
    insts = by_check[cid]
    print(f"  {cid} ({REGISTRY[cid].title}): {len(insts)} instances, "
          f"e.g. {insts[0]}")

print("\ndesigned counterexample reproductions (example-form checks):")
for r in records:
    if r.id == "T24" and r.status == "fails" and r.ring in ("Z2xZ2xZ2", "Z36"):
        w = r.witness
        print(f"  {r.ring}/{r.kind}: ({w['a']['ideal']}, {w['b']['ideal']}, "
              f"{w['s']['ideal']})")

print("\nhunting meet-inclusion failures among Z2..Z40 for the proper spectrum:")
hits = search_counterexamples("T03", "zmod:2..40", kinds=("prp",))
print(f"  {len(hits)} rings fail; smallest spectra first: "
      f"{[h['ring'] for h in hits[:8]]}")
z36 = next(h for h in hits if h["ring"] == "Z36")
print(f"  Z36 witness: ({z36['witness']['a']['ideal']}, "
      f"{z36['witness']['b']['ideal']}, {z36['witness']['s']['ideal']})")
