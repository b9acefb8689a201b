"""setfeat models module."""

from .model import ModelDocument, AssignmentDocument
