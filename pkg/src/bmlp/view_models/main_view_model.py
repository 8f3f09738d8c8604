import logging
from pathlib import Path

import customtkinter as ctk

from ..datalog.codec import format_matrix
from ..datalog.facts import read_facts
from ..datalog.symbols import build_symbols
from ..engine.pipeline import is_foreign_pipeline, parse_pipeline, run_pipeline
from ..errors import BmlpError

logger = logging.getLogger(__name__)


class MainViewModel:
    def __init__(self):
        """
        Initializes the MainViewModel.

        This class holds the explorer's state: the loaded fact base, its symbol
        table and the named results of the last pipeline run.
        """
        self.fact_base = None
        self.symbols = None
        self.loaded_from = None
        self.results = {}

        # --- State Variables ---
        # These are observable properties that the view can bind to.
        self.facts_path = ctk.StringVar()
        self.pipeline_path = ctk.StringVar()
        self.type_name = ctk.StringVar(value="location")
        self.use_builtin = ctk.BooleanVar(value=True)
        self.relation_list = ctk.Variable(value=[])
        self.selected_relation = ctk.StringVar()
        self.breakdown_text = ctk.StringVar()
        self.status_text = ctk.StringVar()

    def _report(self, message):
        logger.info(message)
        self.status_text.set(message)

    def load_facts(self):
        """
        Parses the facts file in `facts_path` and builds its symbol table.

        Returns:
            bool: True on success. Failures are reported in `status_text`.
        """
        path = self.facts_path.get()
        if not path:
            self._report("No facts file selected.")
            return False
        try:
            fact_base = read_facts(path)
            symbols = build_symbols(fact_base, self.type_name.get())
        except (BmlpError, OSError) as e:
            self._report(f"Could not load {Path(path).name}: {e}")
            return False
        self.fact_base, self.symbols = fact_base, symbols
        self.loaded_from = (path, self.type_name.get())
        self.results = {}
        self.relation_list.set([])
        self._report(f"Loaded {len(fact_base)} facts over {len(symbols)} constants.")
        return True

    def run(self):
        """
        Runs the selected pipeline (or the built-in isForeign composition)
        and publishes the result names to `relation_list`.
        """
        # reload when the file or the type predicate changed since the last load
        if self.loaded_from != (self.facts_path.get(), self.type_name.get()) and not self.load_facts():
            return
        try:
            if self.use_builtin.get():
                pipeline = is_foreign_pipeline()
            else:
                pipeline = parse_pipeline(Path(self.pipeline_path.get()).read_text(encoding="utf-8"))
            self.results = run_pipeline(pipeline, self.fact_base, self.symbols)
        except (BmlpError, OSError) as e:
            self._report(f"Pipeline failed: {e}")
            return
        names = list(self.results)
        self.relation_list.set(names)
        if names:
            self.select_relation(names[-1])
        self._report(f"Pipeline produced {len(names)} relations.")

    def select_relation(self, name):
        """
        Renders one result into `breakdown_text`.

        Args:
            name (str): A key of `results`.
        """
        matrix = self.results.get(name)
        if matrix is None:
            self._report(f"No result named {name}.")
            return
        self.selected_relation.set(name)
        self.breakdown_text.set(format_matrix(matrix, self.symbols))
