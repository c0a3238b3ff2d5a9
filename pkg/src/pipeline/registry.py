"""Registry of the Betti-number methods the engine can dispatch to"""
from typing import Callable, Dict, List, Optional

from src.config.logging import get_logger
from src.pipeline.graphs import real_betti_graph
from src.pipeline.hochschild import hochschild_betti
from src.pipeline.real_betti import real_betti_alternating, real_betti_homology_oracle

logger = get_logger(__name__)

METHOD_ALIASES = {"alt": "alternating"}


class MethodRegistry:
    """Registry of all available methods"""

    def __init__(self):
        self.methods: Dict[str, Dict] = {}
        self.aliases: Dict[str, str] = dict(METHOD_ALIASES)
        self._register_default_methods()

    def register_method(self, name: str, function: Callable, description: str, input_kind: str):
        """Register a new method"""
        self.methods[name] = {
            "function": function,
            "description": description,
            "name": name,
            "input": input_kind,
        }
        logger.debug("🔧 Method registered: %s", name)

    def register_alias(self, alias: str, name: str):
        """Accept `alias` wherever `name` is accepted"""
        self.aliases[alias] = name

    def resolve_name(self, name: str) -> str:
        """Canonical name behind an alias; other names pass through unchanged"""
        return self.aliases.get(name, name)

    def get_method(self, name: str) -> Optional[Callable]:
        """Get a method by name"""
        method = self.methods.get(self.resolve_name(name))
        return method["function"] if method else None

    def input_kind(self, name: str) -> Optional[str]:
        method = self.methods.get(self.resolve_name(name))
        return method["input"] if method else None

    def list_methods(self) -> List[Dict]:
        """List all available methods"""
        return [
            {"name": m["name"], "description": m["description"], "input": m["input"]}
            for m in self.methods.values()
        ]

    def _register_default_methods(self):
        """Register built-in methods"""

        self.register_method(
            "alternating",
            real_betti_alternating,
            "Count alternating B|_I-permutations over even subsets (connected chordal input)",
            "building_set",
        )

        self.register_method(
            "homology",
            real_betti_homology_oracle,
            "Sum reduced Betti numbers of the parity subcomplexes (K_B)_I (connected input)",
            "building_set",
        )

        self.register_method(
            "graph",
            real_betti_graph,
            "Sum a-numbers of induced subgraphs on even vertex sets",
            "graph",
        )

        self.register_method(
            "hochschild",
            hochschild_betti,
            "Closed form for Hochschild building sets from the specialized counter",
            "hochschild",
        )
