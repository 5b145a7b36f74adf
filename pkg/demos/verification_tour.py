"""Run each verification suite once and show what it measures."""

from babylon.verify import (
    emit_report,
    verify_alice_strategy,
    verify_bob_strategy,
    verify_lemma,
    verify_theorem,
)

print("1. classification vs solver on every opening with p+q <= 16")
print(emit_report(verify_theorem(16), "text"))

print("2. endgame lemma families enumerated directly (n <= 14)")
for lemma_id in (1, 2, 3, 4):
    report = verify_lemma(lemma_id, 14)
    line = f"   lemma {lemma_id}: {report.checked} states, {report.failed} failures"
    if report.rows:
        verdicts = ", ".join(f"{r['state']}={r['solver']}" for r in report.rows)
        line += f"; excluded family: {verdicts}"
    print(line)

print("\n3. every opponent line against the scripted second player, (6,8)")
print(emit_report(verify_bob_strategy(6, 8), "text"))

print("4. every reply line against the scripted first player, (2,9)")
print(emit_report(verify_alice_strategy(2, 9), "text"))

print("5. the same walk, sampled and seeded, at p+q = 16")
print(emit_report(verify_bob_strategy(7, 9, sample_lines=100, seed=0), "text"))
