from tkinter import filedialog

import customtkinter as ctk


class MainView(ctk.CTkFrame):
    def __init__(self, parent, view_model):
        super().__init__(parent)
        self.view_model = view_model

        self.grid_columnconfigure(0, weight=0)  # Column for controls
        self.grid_columnconfigure(1, weight=1)  # Column for results/details
        self.grid_rowconfigure(0, weight=1)
        self.grid_rowconfigure(1, weight=0)      # Status line

        # --- Left-side controls ---
        self.controls_frame = ctk.CTkFrame(self, fg_color="transparent")
        self.controls_frame.grid(row=0, column=0, padx=0, pady=0, sticky="nsew")
        self.controls_frame.grid_columnconfigure(0, weight=1)

        # --- Inputs Frame ---
        self.input_frame = ctk.CTkFrame(self.controls_frame)
        self.input_frame.grid(row=0, column=0, padx=10, pady=10, sticky="ew")
        self.input_frame.grid_columnconfigure(1, weight=1)

        self.facts_label = ctk.CTkLabel(self.input_frame, text="Facts file")
        self.facts_label.grid(row=0, column=0, padx=10, pady=10, sticky="w")
        self.facts_entry = ctk.CTkEntry(self.input_frame, textvariable=self.view_model.facts_path)
        self.facts_entry.grid(row=0, column=1, padx=10, pady=10, sticky="ew")
        self.facts_button = ctk.CTkButton(
            self.input_frame, text="Browse", width=80,
            command=lambda: self._browse(self.view_model.facts_path, "Facts", "*.pl")
        )
        self.facts_button.grid(row=0, column=2, padx=10, pady=10)

        self.type_label = ctk.CTkLabel(self.input_frame, text="Type predicate")
        self.type_label.grid(row=1, column=0, padx=10, pady=10, sticky="w")
        self.type_entry = ctk.CTkEntry(self.input_frame, textvariable=self.view_model.type_name)
        self.type_entry.grid(row=1, column=1, columnspan=2, padx=10, pady=10, sticky="ew")

        self.load_button = ctk.CTkButton(
            self.input_frame,
            text="Load Facts",
            command=self.view_model.load_facts
        )
        self.load_button.grid(row=2, column=0, columnspan=3, padx=10, pady=10, sticky="ew")

        # --- Pipeline Frame ---
        self.pipeline_frame = ctk.CTkFrame(self.controls_frame)
        self.pipeline_frame.grid(row=1, column=0, padx=10, pady=10, sticky="ew")
        self.pipeline_frame.grid_columnconfigure(0, weight=1)

        self.builtin_checkbox = ctk.CTkCheckBox(
            self.pipeline_frame,
            text="Built-in isForeign pipeline",
            variable=self.view_model.use_builtin,
            command=self._update_widget_states
        )
        self.builtin_checkbox.grid(row=0, column=0, columnspan=2, padx=10, pady=10, sticky="w")

        self.pipeline_entry = ctk.CTkEntry(
            self.pipeline_frame,
            textvariable=self.view_model.pipeline_path,
            placeholder_text="Pipeline file"
        )
        self.pipeline_entry.grid(row=1, column=0, padx=10, pady=10, sticky="ew")
        self.pipeline_button = ctk.CTkButton(
            self.pipeline_frame, text="Browse", width=80,
            command=lambda: self._browse(self.view_model.pipeline_path, "Pipeline", "*.pipeline")
        )
        self.pipeline_button.grid(row=1, column=1, padx=10, pady=10)

        self.run_button = ctk.CTkButton(
            self.pipeline_frame,
            text="Run Pipeline",
            command=self.view_model.run
        )
        self.run_button.grid(row=2, column=0, columnspan=2, padx=10, pady=10, sticky="ew")

        # --- Results Frame ---
        self.results_frame = ctk.CTkScrollableFrame(self.controls_frame, label_text="Relations")
        self.results_frame.grid(row=2, column=0, padx=10, pady=10, sticky="nsew")
        self.controls_frame.grid_rowconfigure(2, weight=1)

        # --- Matrix View ---
        self.breakdown_textbox = ctk.CTkTextbox(
            self,
            font=("monospace", 12),
            state="disabled",
            wrap="none"
        )
        self.breakdown_textbox.grid(row=0, column=1, padx=10, pady=10, sticky="nsew")

        self.status_label = ctk.CTkLabel(self, textvariable=self.view_model.status_text, anchor="w")
        self.status_label.grid(row=1, column=0, columnspan=2, padx=10, pady=(0, 10), sticky="ew")

        # --- Bindings and Traces ---
        self.view_model.relation_list.trace_add("write", self._render_relations)
        self.view_model.breakdown_text.trace_add("write", self._update_breakdown_view)

        self._update_widget_states()

    def _browse(self, variable, label, pattern):
        """Opens a file dialog and stores the chosen path in `variable`."""
        path = filedialog.askopenfilename(filetypes=[(label, pattern), ("All files", "*")])
        if path:
            variable.set(path)

    def _update_widget_states(self, *args):
        """Pipeline file widgets are only live when the built-in is off."""
        state = "disabled" if self.view_model.use_builtin.get() else "normal"
        self.pipeline_entry.configure(state=state)
        self.pipeline_button.configure(state=state)

    def _render_relations(self, *args):
        """Clears and rebuilds the list of result relations."""
        for widget in self.results_frame.winfo_children():
            widget.destroy()

        for name in self.view_model.relation_list.get():
            matrix = self.view_model.results[name]
            button = ctk.CTkButton(
                self.results_frame,
                text=f"{name.ljust(16)} {matrix.rows}x{matrix.cols}  {matrix.count()} facts",
                font=("monospace", 12),
                anchor="w",
                command=lambda n=name: self.view_model.select_relation(n)
            )
            button.pack(fill="x", padx=5, pady=2)

    def _update_breakdown_view(self, *args):
        """Updates the matrix textbox with new content."""
        self.breakdown_textbox.configure(state="normal")
        self.breakdown_textbox.delete("1.0", "end")
        self.breakdown_textbox.insert("1.0", self.view_model.breakdown_text.get())
        self.breakdown_textbox.configure(state="disabled")
