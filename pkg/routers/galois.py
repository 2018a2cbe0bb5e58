from fastapi import APIRouter, HTTPException
from typing import List
from pydantic import BaseModel

import config
from lie.exceptions import FastLieError
from lie.galois import character_of_graded_piece, minus_eigenspace_dimension
from reports import ReportDocument, galois_check_report

router = APIRouter()

class CharacterResponse(BaseModel):
    a: int
    b: int
    label: str

class GradedPieceResponse(BaseModel):
    level: int
    characters: List[CharacterResponse]
    sigma_swaps: bool
    minus_dim: int

class CheckRequest(BaseModel):
    seed: int = config.DEFAULT_SEED
    trials: int = 20
    max_degree: int = 5
    diagonal_only: bool = False

@router.get("/characters/{n}", response_model=GradedPieceResponse)
async def get_characters(n: int):
    """W^{n+1}\\W^n 的 Galois 特征"""
    try:
        label = character_of_graded_piece(n)
        minus_dim = minus_eigenspace_dimension(n)
    except FastLieError as e:
        raise HTTPException(status_code=400, detail=str(e))
    return {
        "level": label.level,
        "characters": [{"a": ch.a, "b": ch.b, "label": str(ch)} for ch in label.characters],
        "sigma_swaps": label.sigma_swaps,
        "minus_dim": minus_dim,
    }

@router.post("/check", response_model=ReportDocument)
async def check_leading_terms(request: CheckRequest):
    """随机自同构的首项同余检验"""
    try:
        return galois_check_report(request.seed, request.trials, request.max_degree,
                                   diagonal_only=request.diagonal_only)
    except FastLieError as e:
        raise HTTPException(status_code=400, detail=str(e))
