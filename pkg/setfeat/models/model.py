"""setfeat JSON documents."""
from __future__ import annotations

from typing import Dict, List, Tuple, Union
from pathlib import Path

from pydantic import Field, BaseModel, validator, parse_file_as

from setfeat.semantics.interpretation import Model, Assignment, Interpretation


class AssignmentDocument(BaseModel):
    """Variable, constant and concept assignment."""

    # Variable name to element.
    vars: Dict[str, str] = Field(default_factory=dict)
    # Constant name to element.
    consts: Dict[str, str] = Field(default_factory=dict)
    # Concept name to its extent.
    concepts: Dict[str, List[str]] = Field(default_factory=dict)

    @validator("vars", "consts")
    def validate_sorted_map(cls, v: Dict[str, str]):
        return dict(sorted(v.items()))

    @validator("concepts")
    def validate_concepts(cls, v: Dict[str, List[str]]):
        return {name: sorted(set(ext)) for name, ext in sorted(v.items())}


class ModelDocument(BaseModel):
    """Serialized model of a consistent term."""

    # Elements, sorted.
    universe: List[str]
    # Atom name to element.
    atoms: Dict[str, str] = Field(default_factory=dict)
    # Relation name to its sorted pairs.
    relations: Dict[str, List[Tuple[str, str]]] = Field(default_factory=dict)
    assignment: AssignmentDocument = Field(default_factory=AssignmentDocument)

    @validator("universe")
    def validate_universe(cls, v: List[str]):
        return sorted(set(v))

    @validator("atoms")
    def validate_atoms(cls, v: Dict[str, str]):
        return dict(sorted(v.items()))

    @validator("relations")
    def validate_relations(cls, v: Dict[str, List[Tuple[str, str]]]):
        return {f: sorted(set(map(tuple, pairs))) for f, pairs in sorted(v.items())}

    @classmethod
    def from_model(cls, model: Model) -> ModelDocument:
        interp, assign = model.interp, model.assign
        return cls(
            universe=list(interp.universe),
            atoms=interp.atoms,
            relations={f: list(pairs) for f, pairs in interp.relations.items()},
            assignment=AssignmentDocument(
                vars=assign.vars,
                consts=assign.consts,
                concepts={name: list(ext) for name, ext in assign.concepts.items()},
            ),
        )

    @classmethod
    def from_path(cls, path: Union[str, Path]) -> ModelDocument:
        """Parse a document from the file at path."""
        return parse_file_as(ModelDocument, Path(path))

    def to_model(self) -> Model:
        """Rebuild the model; validation errors surface as ``ModelError``."""
        interp = Interpretation(self.universe, self.atoms, self.relations)
        assign = Assignment(self.assignment.vars, self.assignment.consts, self.assignment.concepts)
        return Model(interp, assign)

    def dump(self) -> str:
        return self.json(indent=2) + "\n"
