from fastapi import APIRouter, HTTPException
from typing import List, Optional, Union
from pydantic import BaseModel

from lie.exceptions import FastLieError
from reports import ReportDocument, selmer_report
from selmer.assumptions import AssumptionSet, Mode

router = APIRouter()

class LedgerRequest(BaseModel):
    r: int = 1
    s: int = 2
    mode: Mode = Mode.ALL_NONVANISHING
    exceptional: List[int] = []
    exceptional_bar: Optional[List[int]] = None
    h2_cap: Union[int, str, None] = "symbolic"
    max_level: int = 10

@router.post("/ledger", response_model=ReportDocument)
async def build_selmer_ledger(request: LedgerRequest):
    """逐层 Selmer 维数账本"""
    try:
        assumptions = AssumptionSet.from_config({
            "mode": request.mode.value,
            "exceptional": {"chi": request.exceptional, "chi_bar": request.exceptional_bar},
            "h2_cap": request.h2_cap,
        })
        return selmer_report(request.r, request.s, assumptions, request.max_level)
    except FastLieError as e:
        raise HTTPException(status_code=400, detail=str(e))
