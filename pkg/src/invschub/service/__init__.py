"""Service layer: pydantic schemas and the FastAPI application.

Run it with: uvicorn invschub.service.app:app
"""
