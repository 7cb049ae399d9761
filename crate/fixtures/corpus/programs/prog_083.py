# fixture program 083
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
items = [('ocean', 61), ('matrix', 38), ('engine', 84)]
print(len(items))
for element in items:
    print(element[0])
image_size = (32, 480)
print('size', image_size)
width, height = image_size
number_pattern = re.compile(r'^\s*#')
print(number_pattern.pattern)
found_match = number_pattern.search('abc 123')
field = 'matrix'
print('column', field)
lookup = {field: 0}
date_str = '2018-06-02'
print('date', date_str)
date_str = '2001-08-15'
history = collections.deque([2002, 2027, 2012, 2026, 2005, 2008, 2001, 1995, 2007, 2028, 2009], maxlen=10)
history.append(5)
contact_email = 'judy.candle@matrix.com'
print('mail to', contact_email)
sentences = ['dublin', 'berlin', 'oslo', 'oslo', 'vienna', 'oslo', 'rome']
for element in sentences:
    print(element)
sentences.append('extra')
sentences = ['ivan', 'bob', 'bob', 'carol', 'frank', 'dave']
timestamp = datetime.date(2008, 11, 13)
print(timestamp.year)
timestamp = datetime.datetime(2014, 9, 2, 17, 54)
unique_ids = {470, 447, 443, 20}
print(len(unique_ids))
state = 'closed'
print('mode', state)
if state == 'train':
    print('training')
content_text = 'Castle matrix python python orange?'
word_list = content_text.split()
content_text = content_text.strip()
content_text = 'Falcon butter butter summer zebra bridge jungle jungle!'
api_key = 'wD9bnNzMG1lPTDPbrt9vlaglrBWc'
masked = '*' * len(api_key)
print('key length', len(api_key))
api_key = '4NgQnlGCGmOztbcef'
step_range = range(1, 91)
print(list(step_range)[:3])
altitude = 23.468
print('measured', altitude)
rounded = round(altitude, 1)
n = 13
xy = (-32, -28)
s = 'Stone apple needle jungle signal stone tunnel rabbit.'
for loop_round in range(3):
    chance = 0.644
    print(chance)
