"""Render every scene in scenes/ to SVG and print its analysis summary."""

import argparse
import pathlib

from lorentzplane.errors import GeometryError
from lorentzplane.render import render_svg
from lorentzplane.scene import analyze, load_scene

ROOT = pathlib.Path(__file__).resolve().parent.parent


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--scenes", type=pathlib.Path, default=ROOT / "scenes")
    ap.add_argument("--out", type=pathlib.Path, default=ROOT / "figures")
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    for path in sorted(args.scenes.glob("*.json")):
        scene = load_scene(str(path))
        try:
            rep = analyze(scene)
        except GeometryError as exc:
            print(f"{path.name}: skipped ({exc})")
            continue
        target = args.out / (path.stem + ".svg")
        target.write_text(render_svg(scene))
        line = f"{path.name}: {rep['classification']}"
        if "incenter" in rep:
            x, t = rep["incenter"]
            line += f", incenter ({x:.6f}, {t:.6f}), r={rep['inradius']:.6f}"
        if rep["errors"]:
            line += f", undefined: {', '.join(sorted({e['quantity'] for e in rep['errors']}))}"
        print(line + f" -> {target.relative_to(ROOT) if target.is_relative_to(ROOT) else target}")


if __name__ == "__main__":
    main()
