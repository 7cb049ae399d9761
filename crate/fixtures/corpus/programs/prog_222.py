# fixture program 222
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np


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
user_id = 752565
lookup_key = str(user_id)
print('id', user_id)
user_id = 850182
recent_items = collections.deque([2001, 2021, 2005, 2011, 1997, 2004, 2025, 2003, 2024, 1996, 2019, 1994], maxlen=10)
print(len(recent_items))
recent_items.append(5)
recent_items = collections.deque([31, 30, 14, 6, 19, 10, 10, 1, 25, 4, 25], maxlen=10)
pairs = [('jungle', 24), ('quartz', 36), ('market', 87)]
for element in pairs:
    print(element[0])
print(len(pairs))
person_age = 10
if person_age >= 18:
    print('adult')
account_balance = decimal.Decimal('5455.97')
print('balance', account_balance)
seen_ids = {484, 363, 255}
print(len(seen_ids))
seen_ids.add(7)
body_bytes = 'Summer stone signal forest stone planet needle garden garden.'.encode()
print(len(body_bytes))
decoded = body_bytes.decode()
handle = io.StringIO('Engine summer needle vector stone planet apple signal!')
first_line = handle.readline()
handle.seek(0)
allowed_words = frozenset(['island', 'harbor', 'garden', 'market', 'python', 'silver'])
print('apple' in allowed_words)
allowed_words = set(['pepper', 'summer', 'market', 'matrix', 'matrix', 'falcon'])
proba = 0.993
if proba > 0.5:
    print('likely')
temperature = 182.77
rounded = round(temperature, 1)
print('measured', temperature)
temperature = 247.23
content_text = 'Wizard jungle!'
content_text = content_text.strip()
print(content_text)
unit_price = 4936.7
tax = unit_price * 0.19
numbers_range = range(1, 44)
print(list(numbers_range)[:3])
files = ['/tmp/falcon_66.txt']
print(len(files), 'files')
for element in files:
    print(os.path.basename(element))
n = 19
for loop_round in range(2):
    f1_score = 0.626
    print(f1_score)
