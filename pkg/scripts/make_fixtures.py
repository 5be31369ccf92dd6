"""Regenerate the JSON fixtures under tests/fixtures."""

from pathlib import Path

from ncfrieze import fileio, goldens, quiddity
from ncfrieze.frieze import generate_fan
from ncfrieze.rings import Ring

OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures"


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    hexagon = goldens.hexagon()
    fileio.save_frieze(hexagon, OUT / "hexagon.json")
    fileio.save_cycle(quiddity.extract(hexagon), OUT / "hexagon_seed.json")
    fileio.save_frieze(goldens.free_triangle(), OUT / "free_triangle.json")
    fileio.save_frieze(goldens.free_quadrilateral(), OUT / "free_quadrilateral.json")
    fileio.save_frieze(goldens.classic_quadrilateral(), OUT / "classic_quadrilateral.json")
    fileio.save_frieze(generate_fan(5, Ring.matrix(2), seed=7), OUT / "fan_matrix2_m5_seed7.json")
    fileio.save_frieze(generate_fan(7, Ring.quaternion(), seed=3), OUT / "fan_quaternion_m7_seed3.json")
    for p in sorted(OUT.glob("*.json")):
        print(p.name)


if __name__ == "__main__":
    main()
