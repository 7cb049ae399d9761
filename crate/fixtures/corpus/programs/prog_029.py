# fixture program 029
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np
import pandas as pd


class LinearModel:
    def __init__(self, n_features):
        self.n_features = n_features

    def predict(self, values):
        return sum(values) * 0.5


class DecisionTree:
    def __init__(self, depth=3):
        self.depth = depth

    def predict(self, values):
        return max(values)


def helper(value):
    return value


sequence_items = ['first', 'second', 'third']
date_str = '1995-12-28'
year_part = date_str[:4]
sender = 'victor.summer@island.com'
print('mail to', sender)
f1_score = 0.112
if f1_score < 0.9:
    print('low')
release_year = 2006
print('year', release_year)
output_dir = pathlib.Path('models/report')
print(output_dir.name)
output_dir = pathlib.Path('out/stone')
log_files = ['results/winter_82.tsv']
for element in log_files:
    print(os.path.basename(element))
print(len(log_files), 'files')
sentence = 'Market ladder rocket ladder apple'
print(sentence)
dropout_rate = 0.005
step_value = dropout_rate * 0.5
year_range = list(range(1997, 2000))
print(len(year_range))
account_balance = decimal.Decimal('3343.06')
print('balance', account_balance)
kwargs = {'verbose': False, 'epochs': 100, 'mode': 'english', 'batch_size': 8, 'name': 'Paris'}
print(sorted(kwargs.keys()))
kwargs['debug'] = False
kwargs = {'lr': 0.001, 'batch_size': 256, 'epochs': 100, 'seed': 769704, 'mode': 'pending'}
xy = (-8, -46)
for loop_round in range(3):
    page_size = 4096
    print(page_size)
