from abc import ABC, abstractmethod
from typing import Any, ClassVar, Generic, List, Literal, Optional, TypeAlias, TypeVar, cast

import os

from pydantic import BaseModel, ConfigDict, Field, ValidationError

PydanticModel: TypeAlias = type[BaseModel]

InputT = TypeVar("InputT", bound=BaseModel)


class ExportParams(BaseModel):
    path: str

    model_config = ConfigDict(frozen=True)


class FileDetails(BaseModel):
    name: str
    path: str
    size: int

    model_config = ConfigDict(frozen=True)


class ExporterOutput(BaseModel):
    status: Literal["COMPLETED", "FAILED"]
    error: Optional[str] = None
    size_str: str
    file_details: List[FileDetails] = Field(default_factory=list)

    model_config = ConfigDict(frozen=True)


def describe_file(path: str) -> FileDetails:
    return FileDetails(name=os.path.basename(path), path=os.path.abspath(path),
                       size=os.path.getsize(path))


def size_string(size: int) -> str:
    if size < 1024:
        return f"{size} B"
    if size < 1024 * 1024:
        return f"{size / 1024:.1f} KB"
    return f"{size / 1024 / 1024:.2f} MB"


class BaseExporter(ABC, Generic[InputT]):
    """
    Base class for report exporters.

    Subclasses set `name`, `input_model` and implement `_run_impl(payload)`,
    which writes the file and returns an ExporterOutput. Errors from the
    filesystem propagate as OSError.
    """

    name: str
    extension: str
    input_model: ClassVar[PydanticModel] = ExportParams
    output_model = ExporterOutput

    def __init__(self, params: InputT | dict) -> None:
        self.params = self._validate_input(params)

    def _validate_input(self, params: InputT | dict) -> InputT:
        try:
            if isinstance(params, BaseModel):
                return cast(InputT, params)
            return cast(InputT, self.input_model.model_validate(params))
        except ValidationError as e:
            raise ValueError(f"[{self.__class__.__name__}] Invalid input params") from e

    def _validate_output(self, result: ExporterOutput) -> ExporterOutput:
        if not isinstance(result, ExporterOutput):
            raise TypeError(f"[{self.__class__.__name__}] Must return ExporterOutput")
        return result

    def _ensure_parent(self) -> None:
        parent = os.path.dirname(os.path.abspath(self.params.path))  # type: ignore[attr-defined]
        os.makedirs(parent, exist_ok=True)

    def _completed(self) -> ExporterOutput:
        details = describe_file(self.params.path)  # type: ignore[attr-defined]
        return ExporterOutput(status="COMPLETED", size_str=size_string(details.size),
                              file_details=[details])

    def run(self, payload: Any) -> ExporterOutput:
        self._ensure_parent()
        return self._validate_output(self._run_impl(payload))

    @abstractmethod
    def _run_impl(self, payload: Any) -> ExporterOutput:
        """Write `payload` to params.path."""
        pass
