"""Tests package for agentllm."""
