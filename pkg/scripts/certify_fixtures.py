"""Run the reconstruction pipeline on every fixture and print a one-line summary each.

For every fixture: extract the translation triple, verify the hypotheses,
reconstruct the table, run the proposition suite and try a batch of
single-swap mutations.
"""
import argparse
import time
from dataclasses import dataclass

from moufang import axioms, fixtures, triality
from moufang.errors import AlgebraError


@dataclass
class CertifyConfig:
    max_cyclic: int = 8
    mutations: int = 50
    seed: int = 0


def corpus(cfg: CertifyConfig):
    out = {f"Z{n}": fixtures.cyclic_group(n) for n in range(1, cfg.max_cyclic + 1)}
    out["S3"] = fixtures.symmetric_group_3()
    out["Z2xZ2"] = fixtures.direct_product(fixtures.cyclic_group(2), fixtures.cyclic_group(2))
    out["chein(S3)"] = fixtures.chein_s3()
    s3xz2 = fixtures.direct_product(fixtures.symmetric_group_3(), fixtures.cyclic_group(2))
    out["chein(S3xZ2)"] = fixtures.chein_double(s3xz2)
    return out


def certify(name, tbl, cfg: CertifyConfig):
    start = time.perf_counter()
    tr = triality.extract_triple(tbl)
    hyp = triality.verify_hypotheses(tr, tbl).overall
    rt = triality.reconstruct_multiplication(tr) == tbl
    suite = all(r.passed for r in triality.run_proposition_suite(tr, tbl))
    caught = total = 0
    for _, mutated in fixtures.swap_mutations(tr, cfg.mutations, cfg.seed):
        total += 1
        try:
            triality.derive_bar(mutated)
            caught += not triality.verify_hypotheses(mutated, tbl).overall
        except AlgebraError:
            caught += 1
    rung = axioms.classify(tbl).describe()
    secs = time.perf_counter() - start
    print(f"{name:>14}  n={tbl.order:<3d} {rung:<31} hypotheses={hyp!s:<5} round-trip={rt!s:<5} "
          f"suite={suite!s:<5} mutations caught {caught}/{total}  {secs:.3f}s")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--mutations", type=int, default=CertifyConfig.mutations)
    parser.add_argument("--seed", type=int, default=CertifyConfig.seed)
    args = parser.parse_args()
    cfg = CertifyConfig(mutations=args.mutations, seed=args.seed)
    for name, tbl in corpus(cfg).items():
        certify(name, tbl, cfg)


if __name__ == "__main__":
    main()
