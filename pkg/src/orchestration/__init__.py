"""Orchestration package initialization."""
