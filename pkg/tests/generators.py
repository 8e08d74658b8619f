from pathlib import Path
from typing import Any
import json

from app.domain.algebra import (
    FinModule,
    LeftIdeal,
    RingTable,
    Submodule,
    cyclic_group,
    direct_sum,
    make_cyclic_ring,
    regular_module,
)


class ModuleGenerator:
    @classmethod
    def z4(cls) -> RingTable:
        return make_cyclic_ring(4)

    @classmethod
    def two_z4(cls) -> Submodule:
        """
        2Z_4 ≤ Z_4 над Z.
        """

        return Submodule(cyclic_group(4), [0, 2], label="2Z_4")

    @classmethod
    def ideal_module(cls, n: int, elements: list[int], label: str) -> FinModule:
        return Submodule(regular_module(make_cyclic_ring(n)), elements, label=label).module

    @classmethod
    def regular_witness_module(cls) -> FinModule:
        """
        2Z_4 ⊕ Z_4 над Z_4.
        """

        ring = make_cyclic_ring(4)
        return direct_sum([cls.ideal_module(4, [0, 2], "2Z_4"), regular_module(ring)]).module

    @classmethod
    def ideal(cls, n: int, elements: list[int]) -> LeftIdeal:
        return LeftIdeal(make_cyclic_ring(n), elements)

    @classmethod
    def corrupted_z4_module(cls) -> FinModule:
        """
        Z_2 с действием Z_4, нарушающим (r + s)·m = r·m + s·m: 3·1 = 0.
        """

        return FinModule(
            make_cyclic_ring(4),
            add=[[0, 1], [1, 0]],
            zero=0,
            action=[[0, 0], [0, 1], [0, 0], [0, 0]],
            label="bad",
        )


class DocumentGenerator:
    @classmethod
    def integers_document(cls) -> dict[str, Any]:
        return {
            "rings": {"Z": "integers", "R": {"cyclic": 4}},
            "modules": {
                "Z2": {"ring": "Z", "cyclic": [2]},
                "Z4": {"ring": "Z", "cyclic": [4]},
                "A": {"submodule_of": "Z4", "generators": [2], "label": "2Z_4"},
                "W": {"direct_sum": ["L", "F"]},
                "L": {"ring": "R", "ideal": [2], "label": "2Z_4"},
                "F": {"ring": "R", "regular": True},
            },
            "tasks": [
                {"command": "classify", "module": "Z2"},
                {"command": "check", "property": "self-pure", "submodule": "A"},
                {"command": "check", "property": "pure", "submodule": "A"},
            ],
        }

    @classmethod
    def corrupted_document(cls) -> dict[str, Any]:
        return {
            "rings": {"R": {"cyclic": 4}},
            "modules": {
                "bad": {
                    "ring": "R",
                    "table": {
                        "add": [[0, 1], [1, 0]],
                        "zero": 0,
                        "action": [[0, 0], [0, 1], [0, 0], [0, 0]],
                    },
                },
            },
        }

    @classmethod
    def write(cls, path: Path, document: dict[str, Any]) -> str:
        path.write_text(json.dumps(document, ensure_ascii=False), encoding="utf-8")
        return str(path)
